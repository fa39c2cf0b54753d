#pragma once
// Finite-dimensional sl2 weight modules with explicit e/f actions.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mu/linalg.hpp"
#include "mu/poly.hpp"

namespace mu {

struct RepSpace;
using RepPtr = std::shared_ptr<const RepSpace>;

struct RepSpace {
    std::vector<std::string> labels;
    std::vector<int> weights;
    QMatrix e, f;  // column j = image of basis vector j
    // for sym2 / wedge2 / tensor: the factor indices of each basis vector
    std::vector<std::pair<int, int>> pairs;
    RepPtr base;  // factor space for sym2 / wedge2

    int dim() const { return int(labels.size()); }
    QMatrix h() const;
    bool bracket_ok() const;         // ef - fe == diag(weights)
    bool weight_pattern_ok() const;  // e raises by 2, f lowers by 2
    int index_of(const std::string& label) const;
};

struct RepVector {
    RepPtr space;
    QVec c;

    static RepVector basis(RepPtr s, int i);
    RepVector e() const;
    RepVector f() const;
    bool is_zero() const { return mu::is_zero(c); }
    std::optional<int> weight() const;
    RepVector operator+(const RepVector& o) const;
    RepVector operator*(const Rational& s) const;
    bool operator==(const RepVector& o) const { return c == o.c; }
    std::string str() const;
};

enum class DualConvention {
    Transpose,       // e.phi = e^T phi (the printed dual-action table)
    Contragredient,  // (g.phi)(v) = -phi(g.v)
};

// W_d with basis u_d, u_{d-2}, ..., u_{-d}
RepPtr sym_power_std(int d, const std::string& prefix = "u");
std::string weight_label(const std::string& prefix, int k);  // u3, u_m1, ...
RepPtr dual(const RepPtr& V, DualConvention conv = DualConvention::Transpose);
RepPtr sym2(const RepPtr& V);
RepPtr wedge2(const RepPtr& V);
RepPtr tensor(const RepPtr& V, const RepPtr& W);
// the subrepresentation spanned by `basis`; throws if not invariant
RepPtr subrep(const RepPtr& V, const std::vector<RepVector>& basis, std::vector<std::string> labels);
// coordinates of v in the span of `basis`
std::optional<QVec> coordinates(const std::vector<QVec>& basis, const QVec& v);

std::vector<RepVector> highest_weight_vectors(const RepPtr& V, int wt);
std::vector<RepVector> lowering_orbit(const RepVector& v);

// pairing matrix between Sym2(V*) and Sym2(V): <x*_i x*_j, x_k x_l> = delta / multinomial(2; alpha)
QMatrix multinomial_pairing_sym2(const RepPtr& sym2_dual, const RepPtr& sym2_space);
// {v : <s, v> = 0 for all s}
std::vector<QVec> apolar_annihilator(const std::vector<QVec>& S, const QMatrix& pairing);

// which dual convention reproduces a list of (e or f, source label, target label, coefficient) facts
struct ActionFact {
    char op;  // 'e' or 'f'
    int src;
    int dst;
    Rational coeff;
};
bool check_action(const RepSpace& V, const std::vector<ActionFact>& facts, std::string* why = nullptr);

// Sym2 vectors <-> quadrics in a ring whose variables follow the base basis order
MultiPoly sym2_to_poly(const RepVector& v, const Ring& ring, const std::vector<std::string>& vars);
RepVector poly_to_sym2(const MultiPoly& p, const RepPtr& S, const std::vector<std::string>& vars);

// scale so coefficients are coprime integers with positive leading entry
QVec primitive(const QVec& v);

}  // namespace mu
