#pragma once
// Nets of alternating forms as 7x7 matrix pencils in y2, y0, y_m2.

#include <array>
#include <optional>
#include <vector>

#include "mu/groebner.hpp"
#include "mu/linalg.hpp"
#include "mu/sl2.hpp"

namespace mu {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// y-variable names, in slot order: y2, y0, y_m2
extern const std::array<const char*, 3> kYNames;
Ring y_ring();
Ring z_ring();  // dual variables z2, z0, z_m2

struct SkewNet {
    std::array<QMatrix, 3> m;  // coefficient matrices of y2, y0, y_m2

    bool skew() const;
    PolyMatrix symbolic(const Ring& ring) const;  // y2*m[0] + y0*m[1] + y_m2*m[2]
    // y-weight k of slot s is 2, 0, -2
    static int slot_weight(int s) { return 2 - 2 * s; }
};

// forms live in wedge2(U6*); a form of weight w multiplies y_{-w}
SkewNet net_from_forms(const std::vector<RepVector>& forms);

MultiPoly pfaffian(const PolyMatrix& M);
MultiPoly determinant(const PolyMatrix& M);
std::vector<MultiPoly> principal_pfaffians(const SkewNet& net);
Ideal principal_pfaffian_ideal(const SkewNet& net);

// g(d/dz) F for g in the y-ring and F in the z-ring (y_k acts as d/dz_k)
MultiPoly apply_differential(const MultiPoly& g, const MultiPoly& F);
// the quartic F (in z) with g(d/dz)F = 0 for every input cubic; throws unless unique up to scalar
MultiPoly apolar_quartic(const std::vector<MultiPoly>& cubics);
// degree-d part of Ann(F), as polynomials in y
std::vector<MultiPoly> apolar_forms(const MultiPoly& F, int d);

// F = c * Q^2 with Q monic; nullopt if F is not a constant times a square
std::optional<MultiPoly> square_root_up_to_scalar(const MultiPoly& F);
// a ternary quadric is smooth iff its symmetric matrix is nonsingular
bool smooth_conic(const MultiPoly& Q);

// all monomials of degree d in n variables, in decreasing lex order
std::vector<Exp> monomials_of_degree(int n, int d);

}  // namespace mu
