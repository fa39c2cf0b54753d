#pragma once
// Twisted cubics of the universal family, torus-fixed parametric curves,
// and the catalog of fixed points of H3(X) and H4(X) as curve ideals on the charts.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mu/chart.hpp"

namespace mu {

const std::vector<std::string>& u_names();  // u3, u1, u_m1, u_m3
Ring u_ring();

// rows of P (w6 ... w_m6)^T, in a ring holding the u's and P's variables
std::vector<MultiPoly> cubic_rows(const PolyMatrix& P, const std::vector<MultiPoly>& w, const Ring& target);
Ring cubic_ring(const Ring& params);
Ideal irrelevant_ideal(const Ring& r);  // <u3, u1, u_m1, u_m3>
// the curve of the point P of X (numeric or symbolic), saturated by the irrelevant ideal
Ideal universal_cubic(const PolyMatrix& P, const std::vector<MultiPoly>& w);
// P of the chart at a rational point of its free coordinates
PolyMatrix chart_point_at(const ChartParam& cp, const std::map<std::string, Rational>& pt);

struct DegreeInfo {
    int degree = 0;
    UniPoly minor_gcd;                     // common factor removed (monic)
    std::optional<int> parameter_weight;   // t -> lambda^w t, nullopt if undetermined
    int nonzero_minors = 0;
};
// P over Q[t] or Q[s,t] (then s = 1); error if the generic rank is below 3
DegreeInfo plucker_degree(const PolyMatrix& P);
// entries (k, i, j) of P eta_k P^T that do not vanish identically; empty = isotropic
std::vector<std::string> family_isotropy(const PolyMatrix& P, const SkewNet& net);
PolyMatrix specialize(const PolyMatrix& P, const std::map<std::string, Rational>& values, const Ring& target);
PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const Ring& r);
std::string matrix_str(const PolyMatrix& P);

// closure of the image of a parametric curve in a chart, as an ideal of the free coordinates
// (unit ideal if the curve misses the chart)
Ideal implicitize(const PolyMatrix& P, const ChartParam& cp);

// the fixed line joining two charts whose pinned sets differ in one column
PolyMatrix fixed_line(const Chart& a, const Chart& b, const Ring& st);

struct CurvePiece {
    enum Kind { Universal, Parametric, ChartIdeal } kind;
    std::string label;
    QVec u;                          // Universal: point of P(W3*) in u3, u1, u_m1, u_m3 order
    PolyMatrix param;                // Parametric
    std::string home;                // ChartIdeal: chart label
    std::vector<MultiPoly> gens;     // ChartIdeal: generators in the home chart's full ring
};

struct FiberSpec {
    std::string component;  // L2, Q, C4, L-2
    std::string chart;
    std::string axis;       // a free coordinate of that chart
    int component_degree;
};

struct FixedCurve {
    std::string label;
    std::string scheme;  // H3 | H4
    int expected_degree = 0;
    std::vector<CurvePiece> pieces;
    std::vector<FiberSpec> fibers;
    std::string mirror;  // label of the mirror curve
};

using ChartSet = std::map<std::string, ChartParam>;

// free coordinates of each chart: a9,a10,a11 on p12, b8,b9,b10,b12 on p10, mirrored on the other two
const std::set<std::string>& standard_free_set(const std::string& label);
ChartSet build_chart_set(const SkewNet& net);

// ideal (including the chart residual) of the curve on one chart
Ideal curve_ideal(const FixedCurve& c, const ChartParam& target, const ChartSet& charts,
                  const std::vector<MultiPoly>& w);
Ideal piece_ideal(const CurvePiece& p, const ChartParam& target, const ChartSet& charts,
                  const std::vector<MultiPoly>& w);

struct CatalogInputs {
    PolyMatrix quartic, conic;  // parametric, over Q[t] / Q[s,t]
    std::vector<MultiPoly> thick_line, line_square_conic;  // generators on p10 (full b-coordinates)
};
// H3: four curves of the universal family; H4: six curves (mirror closed)
std::vector<FixedCurve> fixed_curve_catalog(const CatalogInputs& in, const ChartSet& charts);
// component degrees from the parametric forms used by the fibers
std::map<std::string, PolyMatrix> fixed_components(const CatalogInputs& in, const ChartSet& charts);

struct DegreeReport {
    int degree = 0;
    std::vector<std::pair<std::string, long>> lengths;  // component -> generic fiber length
};
DegreeReport curve_degree(const FixedCurve& c, const ChartSet& charts, const std::vector<MultiPoly>& w);

// mirror of an ideal of free coordinates onto the mirror chart
Ideal mirror_ideal(const Ideal& I, const ChartParam& from, const ChartParam& to);

}  // namespace mu
