#include "mu/curves.hpp"

#include <algorithm>

namespace mu {

const std::vector<std::string>& u_names() {
    static const std::vector<std::string> n = {"u3", "u1", "u_m1", "u_m3"};
    return n;
}

Ring u_ring() {
    static Ring r = make_ring(u_names());
    return r;
}

Ring cubic_ring(const Ring& params) {
    auto names = u_names();
    for (auto& n : params->names())
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    return make_ring(names);
}

std::vector<MultiPoly> cubic_rows(const PolyMatrix& P, const std::vector<MultiPoly>& w, const Ring& target) {
    if (w.size() != 7) throw MuError("cubic_rows needs the seven U6 quadrics");
    std::vector<MultiPoly> out;
    for (auto& row : P) {
        MultiPoly s(target);
        for (int c = 0; c < 7; ++c)
            if (!row[c].is_zero()) s += row[c].map_to(target) * w[c].map_to(target);
        out.push_back(s);
    }
    return out;
}

Ideal irrelevant_ideal(const Ring& r) {
    std::vector<MultiPoly> g;
    for (auto& n : u_names()) g.push_back(MultiPoly::var(r, n));
    return Ideal(r, g);
}

Ideal universal_cubic(const PolyMatrix& P, const std::vector<MultiPoly>& w) {
    Ring R = cubic_ring(P[0][0].ring());
    Ideal I(R, cubic_rows(P, w, R));
    return reduced(saturate(I, irrelevant_ideal(R)));
}

PolyMatrix chart_point_at(const ChartParam& cp, const std::map<std::string, Rational>& pt) {
    PolyMatrix P = cp.point();
    std::map<std::string, MultiPoly> sub;
    for (auto& [k, v] : pt) sub[k] = MultiPoly::constant(u_ring(), v);
    for (auto& f : cp.free)
        if (!pt.count(f)) throw MuError("chart_point_at: no value for " + f);
    for (auto& r : cp.residual)
        if (evaluate(r, pt) != 0) throw MuError("chart_point_at: point violates the residual relations");
    return substitute(P, sub, u_ring());
}

// ---- parametric curves ----

namespace {

// ring of P with s = 1 when both s and t occur; returns the affine parameter index
PolyMatrix dehomogenize(const PolyMatrix& P, int* var) {
    const Ring& R = P[0][0].ring();
    if (R->nvars() == 1) {
        *var = 0;
        return P;
    }
    if (R->nvars() == 2 && R->index("s") && R->index("t")) {
        Ring T = make_ring({"t"});
        std::map<std::string, MultiPoly> sub{{"s", MultiPoly::constant(T, 1)}};
        *var = 0;
        return substitute(P, sub, T);
    }
    throw MuError("parametric curve must be over Q[t] or Q[s,t], got " + std::to_string(R->nvars()) + " parameters");
}

UniPoly to_uni(const MultiPoly& f, int var) {
    std::vector<Rational> c;
    for (auto& t : f.terms()) {
        int k = t.m[var];
        if (int(c.size()) <= k) c.resize(k + 1);
        c[k] += t.c;
    }
    return UniPoly(c);
}

}  // namespace

DegreeInfo plucker_degree(const PolyMatrix& P0) {
    if (P0.size() != 3 || P0[0].size() != 7) throw MuError("plucker_degree expects a 3x7 matrix");
    int var = 0;
    PolyMatrix P = dehomogenize(P0, &var);
    DegreeInfo out;
    std::vector<UniPoly> minors;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                MultiPoly m = determinant(columns(P, {a, b, c}));
                if (!m.is_zero()) minors.push_back(to_uni(m, var));
            }
    if (minors.empty()) throw MuError("plucker_degree: generic rank below 3");
    out.nonzero_minors = int(minors.size());
    UniPoly g = minors[0];
    int D = 0;
    for (auto& m : minors) {
        g = gcd(g, m);
        D = std::max(D, m.degree());
    }
    out.minor_gcd = g.monic();
    out.degree = D - g.degree();
    // weights: wt(w_c) = rho_r + omega * k for every monomial t^k of entry (r, c)
    std::vector<QVec> rows;
    QVec rhs;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 7; ++c)
            for (auto& t : P[r][c].terms()) {
                QVec row(4);
                row[r] = 1;
                row[3] = t.m[var];
                rows.push_back(row);
                rhs.push_back(kUWeights[c]);
            }
    QMatrix A(int(rows.size()), 5);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < 4; ++j) A(int(i), j) = rows[i][j];
        A(int(i), 4) = rhs[i];
    }
    QMatrix E = A;
    auto piv = rref(E);
    bool consistent = std::find(piv.begin(), piv.end(), 4) == piv.end();
    QMatrix A0(int(rows.size()), 4);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < 4; ++j) A0(int(i), j) = rows[i][j];
    bool determined = true;
    for (auto& v : nullspace(A0)) determined = determined && v[3] == 0;
    if (consistent && determined) {
        for (size_t i = 0; i < piv.size(); ++i)
            if (piv[i] == 3) {
                Rational w = E(int(i), 4);
                if (w.get_den() == 1) out.parameter_weight = int(w.get_num().get_si());
            }
    }
    return out;
}

std::vector<std::string> family_isotropy(const PolyMatrix& P, const SkewNet& net) {
    const Ring& R = P[0][0].ring();
    std::vector<std::string> bad;
    PolyMatrix Pt = mat_transpose(P);
    for (int k = 0; k < 3; ++k) {
        PolyMatrix M = mat_mul(mat_mul(P, constant_matrix(net.m[k], R)), Pt);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!M[i][j].is_zero())
                    bad.push_back(std::string(kYNames[k]) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") = " + M[i][j].str());
    }
    return bad;
}

PolyMatrix specialize(const PolyMatrix& P, const std::map<std::string, Rational>& values, const Ring& target) {
    std::map<std::string, MultiPoly> sub;
    for (auto& [k, v] : values) sub[k] = MultiPoly::constant(target, v);
    return substitute(P, sub, target);
}

PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const Ring& r) {
    PolyMatrix M;
    for (auto& row : rows) {
        std::vector<MultiPoly> out;
        for (auto& e : row) out.push_back(parse_poly(e, r));
        M.push_back(out);
    }
    return M;
}

std::string matrix_str(const PolyMatrix& P) {
    std::string s;
    for (auto& row : P) {
        s += "[";
        for (size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].str();
        s += "]";
    }
    return s;
}

Ideal implicitize(const PolyMatrix& P0, const ChartParam& cp) {
    int var = 0;
    PolyMatrix P = dehomogenize(P0, &var);
    const Ring& T = P[0][0].ring();
    const std::string t = T->name(var);
    std::vector<std::string> names{t, "_z"};
    for (auto& f : cp.free) names.push_back(f);
    Ring E = make_ring(names, Order::Block, 2);
    const Chart& c = cp.chart;
    std::vector<int> pc(c.pinned.begin(), c.pinned.end());
    PolyMatrix B = columns(P, pc);
    MultiPoly d = determinant(B);
    if (d.is_zero()) return Ideal(cp.free_ring, {MultiPoly::constant(cp.free_ring, 1)});
    PolyMatrix N = mat_mul(adjugate3(B), P);
    MultiPoly dE = d.map_to(E);
    std::vector<MultiPoly> gens;
    for (auto& f : cp.free) {
        auto [r, col] = c.position(f);
        gens.push_back(dE * MultiPoly::var(E, f) - N[r][col].map_to(E));
    }
    gens.push_back(MultiPoly::constant(E, 1) - MultiPoly::var(E, "_z") * dE);
    Ideal K = eliminate(Ideal(E, gens), {t, "_z"});
    std::vector<MultiPoly> out;
    for (auto& g : K.gens()) out.push_back(g.map_to(cp.free_ring));
    for (auto& r : cp.residual) out.push_back(r);
    return reduced(Ideal(cp.free_ring, out));
}

PolyMatrix fixed_line(const Chart& a, const Chart& b, const Ring& st) {
    std::vector<int> common, only_a, only_b;
    for (int x : a.pinned)
        (std::find(b.pinned.begin(), b.pinned.end(), x) != b.pinned.end() ? common : only_a).push_back(x);
    for (int x : b.pinned)
        if (std::find(a.pinned.begin(), a.pinned.end(), x) == a.pinned.end()) only_b.push_back(x);
    if (common.size() != 2) throw MuError("fixed_line: charts " + a.label + " and " + b.label + " are not adjacent");
    PolyMatrix P(3, std::vector<MultiPoly>(7, MultiPoly(st)));
    P[0][common[0]] = MultiPoly::constant(st, 1);
    P[1][common[1]] = MultiPoly::constant(st, 1);
    P[2][only_a[0]] = MultiPoly::var(st, "s");
    P[2][only_b[0]] = MultiPoly::var(st, "t");
    return P;
}

// ---- curve ideals on charts ----

Ideal piece_ideal(const CurvePiece& p, const ChartParam& target, const ChartSet& charts, const std::vector<MultiPoly>& w) {
    const Ring& F = target.free_ring;
    std::vector<MultiPoly> gens = target.residual;
    switch (p.kind) {
        case CurvePiece::Universal: {
            std::map<std::string, Rational> pt;
            for (int i = 0; i < 4; ++i) pt[u_names()[i]] = p.u[i];
            PolyMatrix P = target.point();
            for (int r = 0; r < 3; ++r) {
                MultiPoly s(F);
                for (int c = 0; c < 7; ++c) s += P[r][c] * evaluate(w[c], pt);
                gens.push_back(s);
            }
            return reduced(Ideal(F, gens));
        }
        case CurvePiece::Parametric:
            return implicitize(p.param, target);
        case CurvePiece::ChartIdeal: {
            if (p.home == target.chart.label) {
                for (auto& g : p.gens) gens.push_back(target.to_free(g));
                return reduced(Ideal(F, gens));
            }
            const ChartParam& home = charts.at(p.home);
            Transition tr = make_transition(target, home.chart);
            for (auto& g : p.gens) gens.push_back(transport(g.map_to(home.chart.ring), tr, F).first);
            return reduced(saturate(Ideal(F, gens), tr.d));
        }
    }
    throw MuError("unknown piece kind");
}

Ideal curve_ideal(const FixedCurve& c, const ChartParam& target, const ChartSet& charts, const std::vector<MultiPoly>& w) {
    std::optional<Ideal> acc;
    for (auto& p : c.pieces) {
        Ideal I = piece_ideal(p, target, charts, w);
        acc = acc ? intersect(*acc, I) : I;
    }
    if (!acc) throw MuError("curve " + c.label + " has no pieces");
    return reduced(*acc);
}

Ideal mirror_ideal(const Ideal& I, const ChartParam& from, const ChartParam& to) {
    std::vector<MultiPoly> g;
    for (auto& f : I.gens()) g.push_back(mirror_poly(f.map_to(from.chart.ring), from.chart, to.chart).map_to(to.free_ring));
    return Ideal(to.free_ring, g);
}

static std::string mirror_coord(const std::string& name, const Chart& from, const Chart& to) {
    auto [r, c] = from.position(name);
    return to.coord_at(2 - r, 6 - c);
}

std::map<std::string, PolyMatrix> fixed_components(const CatalogInputs& in, const ChartSet& charts) {
    Ring st = make_ring({"s", "t"});
    std::map<std::string, PolyMatrix> out;
    out["L2"] = fixed_line(charts.at("p12").chart, charts.at("p10").chart, st);
    out["L-2"] = fixed_line(charts.at("p-12").chart, charts.at("p-10").chart, st);
    out["Q"] = in.conic;
    out["C4"] = in.quartic;
    return out;
}

std::vector<FixedCurve> fixed_curve_catalog(const CatalogInputs& in, const ChartSet& charts) {
    const Chart& a = charts.at("p12").chart;
    const Chart& b = charts.at("p10").chart;
    const Chart& c = charts.at("p-10").chart;
    const Chart& d = charts.at("p-12").chart;
    auto comps = fixed_components(in, charts);
    auto param = [&](const std::string& l) {
        CurvePiece p{CurvePiece::Parametric, l, {}, comps.at(l), "", {}};
        return p;
    };
    auto thick = [&](const std::string& l, const Chart& home, const std::vector<MultiPoly>& g) {
        CurvePiece p{CurvePiece::ChartIdeal, l, {}, {}, home.label, g};
        return p;
    };
    auto mirror_gens = [&](const std::vector<MultiPoly>& g) {
        std::vector<MultiPoly> out;
        for (auto& f : g) out.push_back(mirror_poly(f, b, c));
        return out;
    };
    const std::string qb = "b8", qc = mirror_coord("b8", b, c);
    const std::string la = "a9", ld = mirror_coord("a9", a, d);
    auto deg = [&](const std::string& l) { return plucker_degree(comps.at(l)).degree; };
    FiberSpec L2{"L2", "p12", la, deg("L2")}, Lm2{"L-2", "p-12", ld, deg("L-2")}, Qp{"Q", "p10", qb, deg("Q")},
        Qm{"Q", "p-10", qc, deg("Q")}, C4{"C4", "p12", "a11", deg("C4")};

    std::vector<FixedCurve> out;
    auto universal = [&](const std::string& label, QVec u, std::vector<FiberSpec> f, const std::string& mirror) {
        FixedCurve fc;
        fc.label = label;
        fc.scheme = "H3";
        fc.expected_degree = 3;
        fc.pieces.push_back(CurvePiece{CurvePiece::Universal, label, u, {}, "", {}});
        fc.fibers = std::move(f);
        fc.mirror = mirror;
        out.push_back(fc);
    };
    universal("p-3", {0, 0, 0, 1}, {L2}, "p3");
    universal("p-1", {0, 0, 1, 0}, {L2, Qp}, "p1");
    universal("p1", {0, 1, 0, 0}, {Lm2, Qm}, "p-1");
    universal("p3", {1, 0, 0, 0}, {Lm2}, "p-3");

    auto h4 = [&](const std::string& label, std::vector<CurvePiece> pieces, std::vector<FiberSpec> f, const std::string& mirror) {
        FixedCurve fc;
        fc.label = label;
        fc.scheme = "H4";
        fc.expected_degree = 4;
        fc.pieces = std::move(pieces);
        fc.fibers = std::move(f);
        fc.mirror = mirror;
        out.push_back(fc);
    };
    h4("4L2", {thick("4L2", b, in.thick_line)}, {L2}, "4L-2");
    h4("L2^2+Q", {thick("L2^2+Q", b, in.line_square_conic)}, {L2, Qp}, "L-2^2+Q");
    h4("C4", {param("C4")}, {C4}, "C4");
    h4("L2+L-2+Q", {param("L2"), param("L-2"), param("Q")}, {L2, Lm2, Qp}, "L2+L-2+Q");
    h4("L-2^2+Q", {thick("L-2^2+Q", c, mirror_gens(in.line_square_conic))}, {Lm2, Qm}, "L2^2+Q");
    h4("4L-2", {thick("4L-2", c, mirror_gens(in.thick_line))}, {Lm2}, "4L2");
    return out;
}

DegreeReport curve_degree(const FixedCurve& c, const ChartSet& charts, const std::vector<MultiPoly>& w) {
    DegreeReport rep;
    for (auto& f : c.fibers) {
        const ChartParam& cp = charts.at(f.chart);
        Ideal I = curve_ideal(c, cp, charts, w);
        auto g = I.gens();
        g.push_back(MultiPoly::var(cp.free_ring, f.axis) - MultiPoly::constant(cp.free_ring, Rational(7, 3)));
        auto len = quotient_dimension(Ideal(cp.free_ring, g));
        if (!len) throw MuError("curve " + c.label + ": fiber over " + f.axis + " is not finite");
        rep.lengths.push_back({f.component, *len});
        rep.degree += int(*len) * f.component_degree;
    }
    return rep;
}

const std::set<std::string>& standard_free_set(const std::string& label) {
    // p10 is not affine space: greedy solving leaves five coordinates, so the free set is
    // read off an eliminating basis instead
    static const std::map<std::string, std::set<std::string>> sets = {
        {"p12", {"a9", "a10", "a11"}},
        {"p10", {"b8", "b9", "b10", "b12"}},
        {"p-10", {"c1", "c3", "c4", "c5"}},
        {"p-12", {"d2", "d3", "d4"}},
    };
    return sets.at(label);
}

ChartSet build_chart_set(const SkewNet& net) {
    ChartSet cs;
    for (auto& l : chart_labels()) {
        Chart c = make_chart(l);
        cs.emplace(l, chart_parameterize(c, chart_equations(c, net), standard_free_set(l)));
    }
    return cs;
}

}  // namespace mu
