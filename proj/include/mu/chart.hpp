#pragma once
// Affine charts of Gr(3, U6) around the four torus-fixed points of X,
// the isotropy equations, triangular parameterization and chart transitions.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "mu/groebner.hpp"
#include "mu/skew_net.hpp"

namespace mu {

// torus weights of w6 ... w_m6
extern const std::array<int, 7> kUWeights;

struct Chart {
    std::string label;          // p12 | p10 | p-10 | p-12
    std::array<int, 3> pinned;  // 0-based columns of the identity block
    std::vector<int> free_cols;
    std::vector<std::string> coords;  // 12 names, row-major over free columns
    Ring ring;
    WeightAssignment wts;

    // the 3x7 matrix template in the chart ring
    PolyMatrix point() const;
    const std::string& coord_at(int row, int col) const;
    std::pair<int, int> position(const std::string& coord) const;
    int plucker_weight() const;
};

const std::vector<std::string>& chart_labels();
Chart make_chart(const std::string& label);
std::string mirror_label(const std::string& label);

// upper entries of P eta_k P^T for k = y2, y0, y_m2 (nine polynomials)
std::vector<MultiPoly> chart_equations(const Chart& c, const SkewNet& net);

struct ChartParam {
    Chart chart;
    Ring free_ring;
    std::vector<std::string> free;
    std::map<std::string, MultiPoly> sub;  // solved coordinate -> polynomial in the free ring
    std::vector<std::string> solve_order;
    std::vector<MultiPoly> residual;       // relations left among the free coordinates
    WeightAssignment wts;

    MultiPoly to_free(const MultiPoly& f) const;
    PolyMatrix point() const;  // template with solved coordinates substituted
    Ideal residual_ideal() const { return Ideal(free_ring, residual); }
    bool is_affine_space() const { return residual.empty(); }
};

// greedy triangular solve: repeatedly eliminate the lowest-index coordinate that occurs
// linearly with a constant coefficient in some equation.
// With keep_free given, that set is the free set and every other coordinate must be a
// polynomial in it (read off an eliminating Gröbner basis); leftover relations are the residual.
ChartParam chart_parameterize(const Chart& c, const std::vector<MultiPoly>& eqs,
                              const std::set<std::string>& keep_free = {});

// mirror w_i <-> w_-i: entry (r, c) of chart p goes to entry (2-r, 6-c) of the mirror chart
MultiPoly mirror_poly(const MultiPoly& f, const Chart& from, const Chart& to);

// coordinates of chart `to` as fractions num/d of the free coordinates of `from`
struct Transition {
    std::string from, to;
    MultiPoly d;
    std::map<std::string, MultiPoly> num;  // full coordinate of `to` -> numerator
};
Transition make_transition(const ChartParam& from, const Chart& to);
// f (in `to`'s full or free ring) = numerator / d^exponent in `from`'s free ring
std::pair<MultiPoly, int> transport(const MultiPoly& f, const Transition& tr, const Ring& target);

// polynomial matrix helpers
PolyMatrix mat_mul(const PolyMatrix& A, const PolyMatrix& B);
PolyMatrix mat_transpose(const PolyMatrix& A);
PolyMatrix constant_matrix(const QMatrix& A, const Ring& r);
PolyMatrix columns(const PolyMatrix& A, const std::vector<int>& cols);
PolyMatrix adjugate3(const PolyMatrix& B);
PolyMatrix substitute(const PolyMatrix& A, const std::map<std::string, MultiPoly>& sub, const Ring& target);

}  // namespace mu
