#include "mu/pipeline.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "mu/curves.hpp"
#include "mu/deformation.hpp"
#include "mu/fixtures.hpp"
#include "mu/poincare.hpp"
#include "mu/sl2.hpp"

namespace mu {

const std::vector<std::string> kStages = {"rep", "net", "variety", "curves", "deform", "poincare"};

namespace {

constexpr const char* kReportVersion = "1";

// ---------------------------------------------------------------- checks

struct Checks {
    Json list = Json::array();

    Json& add(const std::string& name, bool ok, const std::string& fixture, const std::string& detail,
              const std::vector<std::string>& diff = {}) {
        Json c;
        c["name"] = name;
        c["status"] = ok ? "verified" : "mismatch";
        c["fixture"] = fixture;
        c["detail"] = detail;
        c["diff"] = diff;
        list.push_back(c);
        return list.back();
    }
    bool ok() const {
        return std::all_of(list.begin(), list.end(), [](const Json& c) { return c["status"] == "verified"; });
    }
};

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::vector<std::string> s;
    for (int k : v) s.push_back(std::to_string(k));
    return "{" + join(s) + "}";
}

std::vector<std::string> strs(const std::vector<MultiPoly>& ps) {
    std::vector<std::string> out;
    for (auto& p : ps) out.push_back(p.str());
    return out;
}

// b = s * a
bool proportional_poly(const MultiPoly& a, const MultiPoly& b, Rational* s) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    MultiPoly bb = b.map_to(a.ring());
    Rational r = bb.lead().c / a.lead().c;
    if (s) *s = r;
    return a * r == bb;
}

MultiPoly rename(const MultiPoly& f, const Ring& target) {
    // same number of variables, matched by position
    std::map<std::string, MultiPoly> sub;
    for (int i = 0; i < f.ring()->nvars(); ++i) sub.emplace(f.ring()->name(i), MultiPoly::var(target, i));
    return substitute(f, sub, target);
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

// ---------------------------------------------------------------- context

struct Context {
    const FixtureSet& fx;
    const PipelineConfig& cfg;

    bool rep_done = false;
    RepPtr W3, W3d, S2, S2d, U6, U6d, A;
    DualConvention conv = DualConvention::Transpose;
    std::vector<RepVector> orbit;  // raw f-images of u3^2
    std::vector<RepVector> u6;     // normalized basis of U6 inside Sym2 W3
    std::vector<MultiPoly> w;      // the same, as quadrics in u
    std::vector<Rational> u6_scalars;
    bool u6_matches = false;

    bool net_done = false;
    std::vector<RepVector> forms;  // net generators after normalization
    std::vector<Rational> form_scalars;
    bool forms_match = false;
    SkewNet net;

    std::optional<ChartSet> charts;
    std::optional<std::vector<FixedCurve>> catalog;

    Context(const FixtureSet& f, const PipelineConfig& c) : fx(f), cfg(c) {}

    void ensure_rep();
    void ensure_net();
    const ChartSet& chart_set() {
        if (!charts) {
            ensure_net();
            charts = build_chart_set(net);
        }
        return *charts;
    }
    CatalogInputs catalog_inputs();
    const std::vector<FixedCurve>& curves() {
        if (!catalog) catalog = fixed_curve_catalog(catalog_inputs(), chart_set());
        return *catalog;
    }
    const FixedCurve& curve(const std::string& label) {
        for (auto& c : curves())
            if (c.label == label) return c;
        throw MuError("no fixed curve " + label);
    }
};

const std::vector<std::string> kUVars = {"u3", "u1", "u_m1", "u_m3"};
const std::vector<std::string> kZVars = {"z3", "z1", "z_m1", "z_m3"};

QVec linear_coeffs(const MultiPoly& p, int n) {
    QVec v(n);
    for (auto& t : p.terms()) {
        int idx = -1, deg = 0;
        for (int i = 0; i < n; ++i)
            if (t.m[i]) {
                idx = i;
                deg += t.m[i];
            }
        if (deg != 1) throw MuError("expected a linear form, got " + p.str());
        v[idx] = t.c;
    }
    return v;
}

// compare printed action lines "e(x) = linear form" against a RepSpace whose basis follows the ring
bool action_matches(const RepSpace& V, const FixtureSection& s, std::vector<std::string>* diff) {
    Ring R = s.ring();
    bool ok = true;
    for (auto& e : s.entries) {
        if (e.key == "ring") continue;
        char op = e.key[0];
        std::string src = e.key.substr(2, e.key.size() - 3);
        int j = R->require(src);
        QVec want = linear_coeffs(parse_poly(e.value, R), R->nvars());
        const QMatrix& M = op == 'e' ? V.e : V.f;
        QVec got = M.col(j);
        if (got != want) {
            ok = false;
            if (diff) {
                MultiPoly g(R);
                for (int i = 0; i < R->nvars(); ++i) g += MultiPoly::var(R, i) * got[i];
                diff->push_back(s.where(e) + ": " + e.key + " computed " + g.str() + ", printed " + e.value);
            }
        }
    }
    return ok;
}

void Context::ensure_rep() {
    if (rep_done) return;
    W3 = sym_power_std(3);
    auto& da = fx.at("dual_action");
    conv = DualConvention::Transpose;
    if (!action_matches(*dual(W3, conv), da, nullptr) && action_matches(*dual(W3, DualConvention::Contragredient), da, nullptr))
        conv = DualConvention::Contragredient;
    W3d = dual(W3, conv);
    S2 = sym2(W3);
    S2d = sym2(W3d);
    auto hw = highest_weight_vectors(S2, 6);
    if (hw.size() != 1) throw MuError("Sym2 W3 should have one highest weight vector of weight 6");
    orbit = lowering_orbit(hw[0]);
    auto& fs = fx.at("u6");
    auto printed = fs.polys("gen", fs.ring());
    u6.clear();
    u6_scalars.clear();
    u6_matches = printed.size() == orbit.size();
    for (size_t i = 0; i < orbit.size(); ++i) {
        Rational s = 0;
        QVec basis = primitive(orbit[i].c);
        if (i < printed.size()) {
            QVec pv = poly_to_sym2(rename(printed[i], u_ring()), S2, kUVars).c;
            if (proportional(pv, orbit[i].c, &s))
                basis = pv;  // the printed normalization fixes the basis of U6
            else
                u6_matches = false;
        }
        u6_scalars.push_back(s);
        u6.push_back(RepVector{S2, basis});
    }
    std::vector<std::string> lab;
    for (int k = 6; k >= -6; k -= 2) lab.push_back(weight_label("w", k));
    U6 = subrep(S2, u6, lab);
    U6d = dual(U6, conv);
    A = wedge2(U6d);
    Ring U = u_ring();
    w.clear();
    for (auto& v : u6) w.push_back(sym2_to_poly(v, U, kUVars));
    rep_done = true;
}

// a bilinear form sum c l_i r_j as a vector of wedge2(U6*)
RepVector form_vector(const MultiPoly& f, const RepPtr& A) {
    Ring R = f.ring();
    RepVector v{A, QVec(A->dim())};
    int n = 7;
    for (auto& t : f.terms()) {
        int li = -1, ri = -1;
        for (int i = 0; i < n; ++i)
            if (t.m[i]) li = i;
        for (int i = 0; i < n; ++i)
            if (t.m[n + i]) ri = i;
        if (li < 0 || ri < 0 || t.m[li] != 1 || t.m[n + ri] != 1) throw MuError("not a bilinear form: " + f.str());
        for (int k = 0; k < A->dim(); ++k) {
            auto [p, q] = A->pairs[k];
            if (p == li && q == ri) v.c[k] += t.c;
            if (p == ri && q == li) v.c[k] -= t.c;
        }
    }
    return v;
}

void Context::ensure_net() {
    if (net_done) return;
    ensure_rep();
    auto hw = highest_weight_vectors(A, 2);
    if (hw.size() != 1) throw MuError("wedge2 U6* should have one highest weight vector of weight 2");
    auto orb = lowering_orbit(hw[0]);
    auto& fs = fx.at("net_forms");
    auto printed = fs.polys("gen", fs.ring());
    forms.clear();
    form_scalars.clear();
    forms_match = printed.size() == orb.size();
    for (size_t i = 0; i < orb.size(); ++i) {
        Rational s = 1;
        if (i < printed.size() && !proportional(form_vector(printed[i], A).c, orb[i].c, &s)) {
            forms_match = false;
            s = 1;
        }
        form_scalars.push_back(s);
        forms.push_back(orb[i] * s);
    }
    net = net_from_forms(forms);
    net_done = true;
}

CatalogInputs Context::catalog_inputs() {
    const ChartSet& cs = chart_set();
    CatalogInputs in;
    auto& q = fx.at("family_quartic");
    in.quartic = q.matrix("row", q.ring());
    auto& c = fx.at("family_conic");
    in.conic = c.matrix("row", c.ring());
    Ring B = cs.at("p10").chart.ring;
    for (auto& g : fx.at("thick_line").polys("gen", fx.at("thick_line").ring())) in.thick_line.push_back(g.map_to(B));
    for (auto& g : fx.at("line_square_conic").polys("gen", fx.at("line_square_conic").ring()))
        in.line_square_conic.push_back(g.map_to(B));
    return in;
}

Json rational_json(const Rational& q) { return to_string(q); }

Json matrix_json(const PolyMatrix& M) {
    Json out = Json::array();
    for (auto& r : M) out.push_back(strs(r));
    return out;
}

Json qmatrix_json(const QMatrix& M) {
    Json out = Json::array();
    for (int i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(to_string(M(i, j)));
        out.push_back(row);
    }
    return out;
}

// ---------------------------------------------------------------- stages

Json stage_rep(Context& ctx) {
    Checks ck;
    Json P;
    ctx.ensure_rep();
    auto& fx = ctx.fx;

    auto& da = fx.at("dual_action");
    std::vector<std::string> diff;
    bool dual_ok = action_matches(*ctx.W3d, da, &diff);
    bool other = action_matches(*dual(ctx.W3, ctx.conv == DualConvention::Transpose ? DualConvention::Contragredient
                                                                                      : DualConvention::Transpose),
                                da, nullptr);
    std::string convname = ctx.conv == DualConvention::Transpose ? "transpose" : "contragredient";
    ck.add("dual_action", dual_ok, "dual_action",
           "printed W3* action table reproduced by the " + convname + " dual" +
               (other ? "" : " (the other convention does not reproduce it)"),
           diff);
    P["dual_convention"] = convname;

    bool brackets = true;
    for (auto& V : {ctx.W3, ctx.W3d, ctx.S2, ctx.S2d, ctx.U6, ctx.U6d, ctx.A})
        brackets = brackets && V->bracket_ok() && V->weight_pattern_ok();
    ck.add("brackets", brackets, "", "[e,f] = h and weight pattern on W3, W3*, Sym2 W3, Sym2 W3*, U6, U6*, wedge2 U6*");

    Json scal = Json::array();
    for (auto& s : ctx.u6_scalars) scal.push_back(rational_json(s));
    diff.clear();
    if (!ctx.u6_matches) {
        auto& fs = fx.at("u6");
        auto gens = fs.all("gen");
        for (size_t i = 0; i < ctx.orbit.size(); ++i) {
            bool ok = false;
            if (i < gens.size()) {
                QVec pv = poly_to_sym2(rename(parse_poly(gens[i]->value, fs.ring()), u_ring()), ctx.S2, kUVars).c;
                ok = proportional(ctx.orbit[i].c, pv);
            }
            if (!ok)
                diff.push_back((i < gens.size() ? fs.where(*gens[i]) : fs.file) + ": orbit vector " + std::to_string(i + 1) +
                               " is " + sym2_to_poly(ctx.orbit[i], u_ring(), kUVars).str());
        }
    }
    ck.add("u6_orbit", ctx.u6_matches, "u6", "lowering orbit of u3^2 has 7 vectors, each proportional to the printed list", diff);
    P["u6"] = strs(ctx.w);
    P["u6_orbit_scalars"] = scal;  // printed = scalar * f^i(u3^2)

    diff.clear();
    bool act = action_matches(*ctx.U6, fx.at("u6_action"), &diff);
    ck.add("u6_action", act, "u6_action", "induced e, f on w6..w_m6 match the printed table", diff);

    // the net of quadrics q and its apolar complement
    auto& qs = fx.at("net_q");
    std::vector<RepVector> q;
    for (auto& g : qs.polys("gen", qs.ring())) q.push_back(poly_to_sym2(g, ctx.S2d, kZVars));
    bool top = q.size() == 3 && q[0].e().is_zero() && q[0].weight() == 2;
    std::vector<QVec> qc;
    for (auto& v : q) qc.push_back(v.c);
    bool closed = true;
    for (auto& v : q) closed = closed && in_span(qc, v.e().c) && in_span(qc, v.f().c);
    ck.add("net_q", top && closed, "net_q", "q is a 3-dim sl2-submodule of Sym2 W3* with top vector of weight 2");

    QMatrix pairing = multinomial_pairing_sym2(ctx.S2d, ctx.S2);
    auto perp = apolar_annihilator(qc, pairing);
    std::vector<QVec> u6c;
    for (auto& v : ctx.u6) u6c.push_back(v.c);
    bool same = same_span(perp, u6c, ctx.S2->dim());
    ck.add("q_perp", same, "net_q", "apolar annihilator of q (dim " + std::to_string(perp.size()) + ") equals span U6");
    P["q_perp_dimension"] = perp.size();

    auto& u3s = fx.at("u3");
    std::vector<QVec> all = u6c;
    bool inv = true;
    std::vector<RepVector> u3;
    for (auto& g : u3s.polys("gen", u3s.ring())) u3.push_back(poly_to_sym2(rename(g, u_ring()), ctx.S2, kUVars));
    std::vector<QVec> u3c;
    for (auto& v : u3) u3c.push_back(v.c);
    for (auto& v : u3) {
        inv = inv && in_span(u3c, v.e().c) && in_span(u3c, v.f().c);
        all.push_back(v.c);
    }
    bool split = inv && rank(QMatrix::from_rows(all, ctx.S2->dim())) == 10;
    ck.add("sym2_split", split, "u3", "Sym2 W3 = U6 + U3 with U3 the printed invariant quadrics");
    P["sym2_decomposition"] = {7, 3};
    return Json{{"status", ck.ok() ? "verified" : "mismatch"}, {"payload", P}, {"checks", ck.list}};
}

std::string form_str(const RepVector& v) {
    // w*_i ^ w*_j with the U6* labels
    return v.str();
}

Json stage_net(Context& ctx) {
    Checks ck;
    Json P;
    ctx.ensure_net();
    auto& fx = ctx.fx;

    Json sc = Json::array(), fs = Json::array();
    for (size_t i = 0; i < ctx.forms.size(); ++i) {
        sc.push_back(rational_json(ctx.form_scalars[i]));
        fs.push_back(form_str(ctx.forms[i]));
    }
    ck.add("net_forms", ctx.forms_match, "net_forms",
           "highest weight vector of weight 2 in wedge2 U6* and its f-images are proportional to the printed generators");
    P["forms"] = fs;
    P["form_scalars"] = sc;

    Ring Y = y_ring();
    PolyMatrix eta = ctx.net.symbolic(Y);
    auto& es = fx.at("eta");
    PolyMatrix printed = es.matrix("row", es.ring());
    std::vector<std::string> diff;
    auto rows = es.all("row");
    if (printed.size() != 7 || printed[0].size() != 7) diff.push_back(es.file + ": eta must be 7x7");
    else
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                MultiPoly p = printed[i][j].map_to(Y);
                if (p != eta[i][j])
                    diff.push_back(es.where(*rows[i]) + ": eta(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") computed " + eta[i][j].str() + ", printed " + p.str());
            }
    ck.add("eta", diff.empty(), "eta", "net_from_forms reproduces the printed 7x7 matrix entrywise", diff);
    ck.add("eta_skew", ctx.net.skew(), "", "each coefficient matrix is skew-symmetric");
    P["eta"] = matrix_json(eta);
    P["eta_coefficients"] = {{"y2", qmatrix_json(ctx.net.m[0])}, {"y0", qmatrix_json(ctx.net.m[1])}, {"y_m2", qmatrix_json(ctx.net.m[2])}};

    auto pfs = principal_pfaffians(ctx.net);
    auto& ps = fx.at("pfaffians");
    auto pp = ps.polys("gen", ps.ring());
    std::vector<MultiPoly> ppY;
    for (auto& p : pp) ppY.push_back(p.map_to(Y));
    bool eq = ideal_equal(Ideal(Y, pfs), Ideal(Y, ppY));
    // generator-wise up to scalars, in the order printed
    Json gscal = Json::array();
    bool each = pfs.size() == ppY.size();
    diff.clear();
    for (size_t i = 0; i < ppY.size(); ++i) {
        Rational s;
        bool found = false;
        for (auto& f : pfs)
            if (proportional_poly(ppY[i], f, &s)) {
                found = true;
                gscal.push_back(rational_json(s));
                break;
            }
        if (!found) {
            each = false;
            gscal.push_back(nullptr);
            diff.push_back(ps.where(*ps.all("gen")[i]) + ": " + ppY[i].str() + " is not a multiple of a principal Pfaffian");
        }
    }
    ck.add("pfaffians", eq && each, "pfaffians",
           "the 7 principal Pfaffians generate the printed ideal, one scalar per generator", diff);
    WeightAssignment yw{{"y2", 2}, {"y0", 0}, {"y_m2", -2}};
    bool hom = std::all_of(pfs.begin(), pfs.end(), [&](auto& f) { return weight_of(f, yw).has_value(); });
    std::map<std::string, MultiPoly> swap{{"y2", MultiPoly::var(Y, "y_m2")}, {"y_m2", MultiPoly::var(Y, "y2")}};
    std::vector<MultiPoly> sw;
    for (auto& f : pfs) sw.push_back(substitute(f, swap, Y));
    bool mir = ideal_equal(Ideal(Y, pfs), Ideal(Y, sw));
    ck.add("pfaffians_symmetry", hom && mir, "", "Pfaffians are weight-homogeneous and the ideal is stable under y2 <-> y_m2");
    P["pfaffians"] = strs(pfs);

    // the quartic apolar to the Pfaffian cubics
    MultiPoly F = apolar_quartic(pfs);
    auto Q = square_root_up_to_scalar(F);
    bool smooth = Q && smooth_conic(*Q);
    auto ann = apolar_forms(F, 3);
    bool span_ok = ann.size() == 7 && ideal_equal(Ideal(Y, ann), Ideal(Y, pfs));
    ck.add("double_conic_square", smooth && span_ok, "",
           "the apolar quartic is the square of a smooth conic and its degree-3 annihilator is the Pfaffian span");
    auto& dc = fx.at("double_conic");
    MultiPoly Fp = rename(dc.poly("form", dc.ring()), z_ring());
    Rational s;
    bool prop = proportional_poly(F, Fp, &s);
    auto annp = apolar_forms(Fp, 3);
    bool printed_apolar = annp.size() == 7 && ideal_equal(Ideal(Y, annp), Ideal(Y, pfs));
    diff.clear();
    if (!prop) {
        diff.push_back(dc.where(dc.entry("form")) + ": printed " + Fp.str());
        diff.push_back("computed " + F.str() + (Q ? " = c*(" + Q->str() + ")^2" : ""));
        std::vector<std::string> bad;
        for (auto& g : pfs) {
            MultiPoly r = apply_differential(g, Fp);
            if (!r.is_zero()) bad.push_back(g.str() + " -> " + r.str());
        }
        if (!bad.empty()) diff.push_back("printed quartic is not apolar to: " + join(bad, "; "));
    }
    ck.add("double_conic", prop, "double_conic", "apolar quartic of the Pfaffian span is proportional to the printed double conic",
           diff);
    P["double_conic"] = {{"computed", F.str()},
                         {"conic", Q ? Q->str() : ""},
                         {"smooth", smooth},
                         {"printed", Fp.str()},
                         {"printed_annihilator_dimension", annp.size()},
                         {"printed_is_apolar_to_pfaffians", printed_apolar}};
    return Json{{"status", ck.ok() ? "verified" : "mismatch"}, {"payload", P}, {"checks", ck.list}};
}

Json chart_json(const ChartParam& cp, const std::vector<MultiPoly>& eqs) {
    Json j;
    j["pinned"] = {cp.chart.pinned[0] + 1, cp.chart.pinned[1] + 1, cp.chart.pinned[2] + 1};
    j["equations"] = strs(eqs);
    j["free"] = cp.free;
    Json sub = Json::object();
    for (auto& v : cp.chart.coords)
        if (cp.sub.count(v)) sub[v] = cp.sub.at(v).str();
    j["solved"] = sub;
    j["residual"] = strs(cp.residual);
    Json w = Json::object();
    for (auto& v : cp.chart.coords) w[v] = cp.chart.wts.at(v);
    j["weights"] = w;
    j["affine_space"] = cp.is_affine_space();
    return j;
}

Json stage_variety(Context& ctx) {
    Checks ck;
    Json P;
    auto& fx = ctx.fx;
    const ChartSet& cs = ctx.chart_set();
    std::map<std::string, std::vector<MultiPoly>> eqs;
    for (auto& l : chart_labels()) eqs[l] = chart_equations(cs.at(l).chart, ctx.net);

    const ChartParam& p12 = cs.at("p12");
    Ring A = p12.chart.ring;
    auto& ve = fx.at("v12_equations");
    std::vector<MultiPoly> printed;
    for (auto& g : ve.polys("gen", ve.ring())) printed.push_back(g.map_to(A));
    std::vector<std::string> diff;
    GroebnerBasis gc = Ideal(A, eqs["p12"]).groebner(), gp = Ideal(A, printed).groebner();
    auto gens = ve.all("gen");
    for (size_t i = 0; i < printed.size(); ++i)
        if (!gc.contains(printed[i])) diff.push_back(ve.where(*gens[i]) + ": " + printed[i].str() + " is not in the computed ideal");
    for (auto& e : eqs["p12"])
        if (!gp.contains(e)) diff.push_back("computed " + e.str() + " is not in the printed ideal");
    ck.add("v12_equations", diff.empty(), "v12_equations", "the nine isotropy equations on V12 equal the printed ideal", diff);

    bool affine = p12.is_affine_space() && p12.free == std::vector<std::string>{"a9", "a10", "a11"};
    diff.clear();
    auto& vs = fx.at("v12_solved");
    for (auto& e : vs.entries) {
        if (e.key == "ring") continue;
        MultiPoly want = p12.to_free(parse_poly(e.value, vs.ring()).map_to(A));
        auto it = p12.sub.find(e.key);
        if (it == p12.sub.end() || it->second != want)
            diff.push_back(vs.where(e) + ": " + e.key + " = " + (it == p12.sub.end() ? "free" : it->second.str()));
    }
    ck.add("v12_affine", affine && diff.empty(), "v12_solved", "V12 is affine 3-space over a9, a10, a11", diff);

    bool kills = true, hom = true;
    for (auto& l : chart_labels()) {
        const ChartParam& cp = cs.at(l);
        GroebnerBasis r = buchberger(cp.residual.empty() ? std::vector<MultiPoly>{MultiPoly(cp.free_ring)} : cp.residual, cp.free_ring);
        for (auto& e : eqs[l]) {
            if (!e.is_zero() && !weight_of(e, cp.chart.wts)) hom = false;
            if (!r.contains(cp.to_free(e))) kills = false;
        }
    }
    ck.add("chart_substitution", kills, "", "the parameterization of every chart kills its nine equations modulo the residual");
    ck.add("chart_homogeneity", hom, "", "all chart equations are weight-homogeneous");

    bool mirror = true;
    for (auto [a, b] : {std::pair<std::string, std::string>{"p12", "p-12"}, {"p10", "p-10"}}) {
        std::vector<MultiPoly> m;
        for (auto& e : eqs[a]) m.push_back(mirror_poly(e, cs.at(a).chart, cs.at(b).chart));
        mirror = mirror && ideal_equal(Ideal(cs.at(b).chart.ring, m), Ideal(cs.at(b).chart.ring, eqs[b]));
    }
    ck.add("chart_mirror", mirror, "", "equations of p-12 and p-10 are the mirrors of p12 and p10");

    // universal cubics
    std::map<std::string, Rational> origin{{"a9", 0}, {"a10", 0}, {"a11", 0}};
    Ideal c0 = universal_cubic(chart_point_at(p12, origin), ctx.w);
    auto& oc = fx.at("v12_origin_cubic");
    std::vector<MultiPoly> og;
    for (auto& g : oc.polys("gen", oc.ring())) og.push_back(g.map_to(c0.ring()));
    Ideal o_sat = saturate(Ideal(c0.ring(), og), irrelevant_ideal(c0.ring()));
    ck.add("cubic_origin", ideal_equal(c0, o_sat), "v12_origin_cubic", "the cubic at the V12 origin is the printed triple structure");

    std::mt19937 rng(20240601);
    auto rnd = [&]() {
        long num = long(rng() % 19) - 9;
        long den = long(rng() % 5) + 1;
        return Rational(num, den);
    };
    Json pts = Json::array();
    bool hp_ok = true;
    for (int k = 0; k < 5; ++k) {
        std::map<std::string, Rational> pt;
        for (auto& v : p12.free) {
            Rational r = rnd();
            r.canonicalize();
            pt[v] = r;
        }
        Ideal C = universal_cubic(chart_point_at(p12, pt), ctx.w);
        UniPoly hp = hilbert_polynomial(C);
        bool ok = hp == UniPoly({Rational(1), Rational(3)});
        hp_ok = hp_ok && ok;
        Json j;
        for (auto& [v, r] : pt) j[v] = to_string(r);
        pts.push_back({{"point", j}, {"hilbert_polynomial", hp.str("m")}});
    }
    ck.add("cubic_hilbert", hp_ok, "", "saturated curve ideals at 5 random points of V12 have Hilbert polynomial 3m+1");
    P["cubic_points"] = pts;

    auto& um = fx.at("v12_universal");
    Ring Rf = cubic_ring(p12.free_ring);
    PolyMatrix M = um.matrix("row", um.ring());
    std::map<std::string, MultiPoly> subR;
    for (auto& [v, e] : p12.sub) subR.emplace(v, e.map_to(Rf));
    std::vector<MultiPoly> minors;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            MultiPoly m = M[i][0] * M[j][1] - M[i][1] * M[j][0];
            minors.push_back(substitute(m, subR, Rf));
        }
    Ideal Csym = universal_cubic(p12.point(), ctx.w);
    bool sym = ideal_equal(Csym, Ideal(Rf, minors).map_to(Csym.ring()));
    ck.add("cubic_minors", sym, "v12_universal",
           "symbolic saturated universal cubic over V12 equals the ideal of 2x2 minors of the printed 3x2 matrix");
    P["universal_cubic_v12"] = strs(reduced(Csym).gens());

    Json charts = Json::object();
    for (auto& l : chart_labels())
        if (ctx.cfg.chart.empty() || ctx.cfg.chart == l) charts[l] = chart_json(cs.at(l), eqs[l]);
    P["charts"] = charts;
    return Json{{"status", ck.ok() ? "verified" : "mismatch"}, {"payload", P}, {"checks", ck.list}};
}

Ideal free_ideal(const ChartParam& cp, const std::vector<MultiPoly>& gens) {
    std::vector<MultiPoly> g = cp.residual;
    for (auto& f : gens) g.push_back(cp.to_free(f.map_to(cp.chart.ring)));
    return Ideal(cp.free_ring, g);
}

Json stage_curves(Context& ctx) {
    Checks ck;
    Json P;
    auto& fx = ctx.fx;
    const ChartSet& cs = ctx.chart_set();

    Json fam = Json::object();
    for (auto& name : fx.names()) {
        if (name.rfind("family_", 0) != 0) continue;
        auto& s = fx.at(name);
        PolyMatrix M = s.matrix("row", s.ring());
        auto bad = family_isotropy(M, ctx.net);
        ck.add(name + ".isotropy", bad.empty(), name, "P eta_k P^T = 0 identically", bad);
        Json j;
        j["isotropic"] = bad.empty();
        if (s.has("degree")) {
            PolyMatrix N = M;
            if (s.has("section")) {
                std::string v = s.get("section");
                std::vector<std::string> rest;
                Ring R = s.ring();
                for (auto& n : R->names())
                    if (n != v) rest.push_back(n);
                N = specialize(M, {{v, 0}}, make_ring(rest));
                j["section"] = v + " = 0";
            }
            DegreeInfo d = plucker_degree(N);
            long want = std::stol(s.get("degree"));
            ck.add(name + ".degree", d.degree == want, name,
                   "Plucker degree " + std::to_string(d.degree) + " (expected " + std::to_string(want) + "), minor gcd " +
                       d.minor_gcd.str("t"));
            j["degree"] = d.degree;
            j["minor_gcd"] = d.minor_gcd.str("t");
            if (d.parameter_weight) j["parameter_weight"] = *d.parameter_weight;
        }
        fam[name] = j;
    }
    P["families"] = fam;

    auto& cat = ctx.curves();
    int nh3 = 0, nh4 = 0;
    Json recs = Json::array();
    bool degs = true, hom = true;
    std::vector<std::string> degdiff;
    for (auto& c : cat) {
        (c.scheme == "H3" ? nh3 : nh4)++;
        Json j;
        j["label"] = c.label;
        j["scheme"] = c.scheme;
        j["mirror"] = c.mirror;
        Json ch = Json::object();
        for (auto& l : chart_labels()) {
            const ChartParam& cp = cs.at(l);
            Ideal I = reduced(curve_ideal(c, cp, cs, ctx.w));
            if (is_unit_ideal(I)) continue;
            Json g = Json::array();
            for (auto& f : I.gens()) {
                auto wt = weight_of(f, cp.wts);
                if (!wt) hom = false;
                g.push_back(f.str());
            }
            ch[l] = g;
        }
        j["ideals"] = ch;
        DegreeReport d = curve_degree(c, cs, ctx.w);
        j["degree"] = d.degree;
        j["hilbert_polynomial"] = std::to_string(c.expected_degree) + "m+1";
        Json len = Json::object();
        for (auto& [comp, n] : d.lengths) len[comp] = n;
        j["component_lengths"] = len;
        if (d.degree != c.expected_degree) {
            degs = false;
            degdiff.push_back(c.label + ": degree " + std::to_string(d.degree));
        }
        recs.push_back(j);
    }
    ck.add("catalog_size", nh3 == 4 && nh4 == 6, "", std::to_string(nh3) + " fixed points on H3, " + std::to_string(nh4) + " on H4");
    ck.add("catalog_degrees", degs, "", "every fixed curve has the degree of its Hilbert polynomial", degdiff);
    ck.add("catalog_homogeneity", hom, "", "every chart ideal of every fixed curve is weight-homogeneous");

    // mirror closure
    std::vector<std::string> mdiff;
    for (auto& c : cat)
        for (auto& l : chart_labels()) {
            const ChartParam& from = cs.at(l);
            const ChartParam& to = cs.at(mirror_label(l));
            Ideal I = curve_ideal(c, from, cs, ctx.w);
            Ideal J = curve_ideal(ctx.curve(c.mirror), to, cs, ctx.w);
            if (!ideal_equal(mirror_ideal(I, from, to), J)) mdiff.push_back(c.label + " on " + l);
        }
    ck.add("catalog_mirror", mdiff.empty(), "", "the catalog is closed under w_i <-> w_-i", mdiff);

    // printed chart ideals
    for (auto& name : fx.names()) {
        auto& s = fx.at(name);
        if (!s.has("curve")) continue;
        const ChartParam& cp = cs.at(s.get("chart"));
        Ideal mine = curve_ideal(ctx.curve(s.get("curve")), cp, cs, ctx.w);
        Ideal theirs = free_ideal(cp, s.polys("gen", s.ring()));
        bool ok = ideal_equal(mine, theirs);
        std::vector<std::string> d;
        if (!ok) d.push_back(s.file + ":" + std::to_string(s.line) + ": computed " + reduced(mine).str());
        ck.add(name, ok, name, "printed ideal of " + s.get("curve") + " on " + s.get("chart") + " equals the computed one", d);
    }

    // L^2 u Q as the union of the double line and the conic; the filtration of the thick line
    const ChartParam& p10 = cs.at("p10");
    auto& dl = fx.at("double_line");
    Ideal D = free_ideal(p10, dl.polys("gen", dl.ring()));
    auto comps = fixed_components(ctx.catalog_inputs(), cs);
    Ideal Q = implicitize(comps.at("Q"), p10);
    Ideal L = implicitize(comps.at("L2"), p10);
    bool uni = ideal_equal(intersect(D, Q), curve_ideal(ctx.curve("L2^2+Q"), p10, cs, ctx.w));
    ck.add("double_line_union", uni, "double_line", "the double line and the fixed conic intersect to L2^2+Q on p10");
    Ideal C = curve_ideal(ctx.curve("4L2"), p10, cs, ctx.w);
    Ideal W = curve_ideal(ctx.curve("p-3"), p10, cs, ctx.w);
    bool chain = ideal_contains(W, C) && !ideal_contains(C, W) && ideal_contains(D, W) && !ideal_contains(W, D) &&
                 ideal_contains(L, D) && !ideal_contains(D, L);
    ck.add("cm_filtration", chain, "double_line", "I_C < I_W < I_D < I_L for the multiplicity-4 line on p10, all strict");
    P["records"] = recs;
    P["h3_count"] = nh3;
    P["h4_count"] = nh4;
    return Json{{"status", ck.ok() ? "verified" : "mismatch"}, {"payload", P}, {"checks", ck.list}};
}

Json tangent_json(const TangentReport& r, const FixedCurve& c) {
    Json j;
    j["label"] = r.label;
    j["scheme"] = c.scheme;
    j["dimension"] = r.dimension;
    j["weights"] = r.weights;
    j["negative_count"] = r.negative_count();
    j["weight_range"] = {r.kmin, r.kmax};
    j["band_13_16_empty"] = r.band_empty;
    Json ch = Json::array();
    for (auto& t : r.charts) {
        Json lj;
        lj["chart"] = t.chart;
        lj["generators"] = t.gens;
        Json ld = Json::object();
        for (auto& [k, d] : t.local_dims) ld[std::to_string(k)] = d;
        lj["local_hom_dims"] = ld;
        ch.push_back(lj);
    }
    j["charts"] = ch;
    j["overlaps"] = r.overlaps;
    return j;
}

Json stage_deform(Context& ctx) {
    Checks ck;
    Json P;
    auto& fx = ctx.fx;
    const ChartSet& cs = ctx.chart_set();
    auto& cat = ctx.curves();

    std::vector<TangentReport> reps(cat.size());
    std::vector<std::string> errs(cat.size());
    auto one = [&](size_t i) {
        try {
            reps[i] = glue_tangent(cat[i], cs, ctx.w);
        } catch (const std::exception& e) {
            errs[i] = e.what();
        }
    };
    if (ctx.cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < long(cat.size()); ++i) one(size_t(i));
    } else
        for (size_t i = 0; i < cat.size(); ++i) one(i);
    for (auto& e : errs)
        if (!e.empty()) throw MuError("deform: " + e);

    std::map<std::string, std::vector<int>> wmap;
    Json recs = Json::array();
    std::vector<std::string> dimdiff, zero, band;
    for (size_t i = 0; i < cat.size(); ++i) {
        auto& r = reps[i];
        wmap[r.label] = r.weights;
        recs.push_back(tangent_json(r, cat[i]));
        int want = cat[i].scheme == "H3" ? 3 : 4;
        if (r.dimension != want) dimdiff.push_back(r.label + ": dimension " + std::to_string(r.dimension));
        if (r.has_zero_weight()) zero.push_back(r.label);
        if (!r.band_empty) band.push_back(r.label);
    }
    ck.add("tangent_dimensions", dimdiff.empty(), "", "tangent dimension 3 at H3 points and 4 at H4 points", dimdiff);
    ck.add("no_zero_weights", zero.empty(), "", "no fixed point has a zero tangent weight", zero);
    ck.add("weight_band", band.empty(), "", "no tangent weight with 13 <= |k| <= 16 (scan range -16..16)", band);

    std::vector<std::string> mdiff;
    for (auto& c : cat) {
        std::vector<int> neg;
        for (int k : wmap[c.mirror]) neg.push_back(-k);
        if (sorted_desc(neg) != wmap[c.label]) mdiff.push_back(c.label + " vs " + c.mirror);
    }
    ck.add("tangent_mirror", mdiff.empty(), "", "mirror fixed points have negated weight multisets", mdiff);

    auto& ws = fx.at("weights");
    Json cmp = Json::array();
    for (auto& e : ws.entries) {
        std::vector<int> want;
        for (long k : ws.ints(e.key)) want.push_back(int(k));
        want = sorted_desc(want);
        auto it = wmap.find(e.key);
        std::vector<int> got = it == wmap.end() ? std::vector<int>{} : it->second;
        auto negs = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int k) { return k < 0; }); };
        bool same = got == want;
        bool ok = same || (!got.empty() && got.size() == want.size() && negs(got) == negs(want));
        std::vector<std::string> d;
        if (!same) d.push_back(ws.where(e) + ": stated " + join_ints(want) + ", computed " + join_ints(got));
        ck.add("weights." + e.key, ok, "weights",
               same ? "computed multiset equals the stated one " + join_ints(want)
                    : "computed " + join_ints(got) + " differs from stated " + join_ints(want) +
                          (ok ? "; negative counts agree" : ""),
               d);
        cmp.push_back({{"label", e.key}, {"stated", want}, {"computed", got}});
    }
    P["stated_vs_computed"] = cmp;

    // printed Hom columns
    Json homs = Json::object();
    Json notes = Json::array();
    for (auto& name : fx.names()) {
        if (name.rfind("hom_", 0) != 0) continue;
        auto& s = fx.at(name);
        const ChartParam& cp = cs.at(s.get("chart"));
        Ring R = s.ring();
        std::vector<MultiPoly> gens;
        for (auto& g : s.poly_list("gens", R)) gens.push_back(cp.to_free(g.map_to(cp.chart.ring)));
        std::vector<int> cw;
        std::vector<std::string> bad;
        auto cols = s.all("col");
        for (auto* c : cols) {
            HomElement h{cp.chart.label, {}};
            for (auto& t : split_list(c->value)) h.column.push_back(cp.to_free(parse_poly(t, R).map_to(cp.chart.ring)));
            if (h.column.size() != gens.size() || !verify_hom(h, gens, cp.residual)) bad.push_back(s.where(*c) + ": " + c->value);
            auto k = h.column.size() == gens.size() ? hom_weight(h, gens, cp.wts) : std::nullopt;
            if (!k) bad.push_back(s.where(*c) + ": no torus weight");
            cw.push_back(k ? *k : 0);
        }
        ck.add(name, bad.empty(), name, "printed columns are homomorphisms (every syzygy contracts into the ideal)", bad);
        auto hm = hom_module(gens, cp.residual, cp.chart.label);
        std::map<int, int> graded;
        bool comps_ok = true;
        for (auto& h : hm)
            for (auto& [k, part] : hom_components(h, gens, cp.wts)) {
                ++graded[k];
                comps_ok = comps_ok && verify_hom(part, gens, cp.residual);
            }
        Json gj = Json::object();
        for (auto& [k, n] : graded) gj[std::to_string(k)] = n;
        if (s.has("generators")) {
            long want = std::stol(s.get("generators"));
            ck.add(name + ".generators", long(hm.size()) == want && comps_ok, name,
                   "hom_module returns " + std::to_string(hm.size()) + " generators (printed " + std::to_string(want) +
                       "), homogeneous parts verified");
        }
        Json j;
        j["chart"] = cp.chart.label;
        j["column_weights"] = cw;
        j["hom_generators"] = hm.size();
        j["hom_generators_by_weight"] = gj;
        if (s.has("weights")) {
            std::vector<int> st;
            for (long k : s.ints("weights")) st.push_back(int(k));
            j["stated_weights"] = st;
            if (sorted_desc(st) != sorted_desc(cw))
                notes.push_back(name + ": printed columns carry weights " + join_ints(sorted_desc(cw)) + ", the stated weights are " +
                                join_ints(sorted_desc(st)));
        }
        if (s.has("alt_weights")) {
            std::vector<int> pw;
            for (long k : s.ints("alt_weights")) pw.push_back(int(k));
            if (sorted_desc(pw) != sorted_desc(cw))
                notes.push_back(name + ": alt_weights lists " + join_ints(pw) + ", the columns carry " + join_ints(cw));
        }
        homs[name] = j;
    }
    P["hom_columns"] = homs;
    P["notes"] = notes;
    P["records"] = recs;
    P["weight_convention"] = "wt(generator) - wt(image)";
    return Json{{"status", ck.ok() ? "verified" : "mismatch"}, {"payload", P}, {"checks", ck.list}};
}

Json stage_poincare(Context& ctx, const Json& deform) {
    Checks ck;
    Json P;
    auto& fx = ctx.fx;
    std::vector<FixedPointRecord> h3, h4;
    for (auto& r : deform["payload"]["records"]) {
        FixedPointRecord f{r["label"].get<std::string>(), r["weights"].get<std::vector<int>>()};
        (r["scheme"] == "H3" ? h3 : h4).push_back(f);
    }
    auto& ps = fx.at("poincare");
    auto run = [&](const std::string& tag, const std::vector<FixedPointRecord>& recs, int dim) {
        std::string why;
        bool smooth = smoothness_audit(recs, dim, &why);
        ck.add(tag + "_smooth", smooth, "", "all " + std::to_string(recs.size()) + " fixed points isolated with tangent dimension " +
                                                 std::to_string(dim), why.empty() ? std::vector<std::string>{} : std::vector<std::string>{why});
        PoincarePolynomial poly = assemble(recs);
        std::vector<long> want = ps.ints(tag);
        bool eq = poly.coeffs == want;
        std::vector<std::string> d;
        if (!eq) d.push_back(ps.where(ps.entry(tag)) + ": computed " + poly.str());
        ck.add(tag, eq, "poincare", "P(" + std::string(tag == "h3" ? "H3" : "H4") + ") = " + poly.str(), d);
        ck.add(tag + "_palindromic", mirror_closed(recs) && poly.palindromic() && poly.total() == long(recs.size()), "",
               "record set is mirror closed, polynomial palindromic, coefficients sum to " + std::to_string(recs.size()));
        P[tag + "_coefficients"] = poly.coeffs;
        P[tag + "_polynomial"] = poly.str();
        std::vector<int> prof;
        for (auto& r : recs) prof.push_back(r.negative_count());
        std::sort(prof.begin(), prof.end());
        P[tag + "_negative_profile"] = prof;
        return prof;
    };
    run("h3", h3, 3);
    auto prof = run("h4", h4, 4);
    std::vector<int> want;
    for (long k : ps.ints("h4_negative_profile")) want.push_back(int(k));
    ck.add("h4_negative_profile", prof == want, "poincare", "negative-weight counts over the H4 fixed points " + join_ints(prof));
    P["convention"] = "exponent = number of negative tangent weights";
    return Json{{"status", ck.ok() ? "verified" : "mismatch"}, {"payload", P}, {"checks", ck.list}};
}

// ---------------------------------------------------------------- cache

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_key(const FixtureSet& fx, const PipelineConfig& cfg, const std::string& stage) {
    uint64_t h = fnv1a(std::string("mu-curves/") + kReportVersion + "/" + stage + "/" + cfg.chart);
    for (auto& [f, text] : fx.sources()) h = fnv1a(f + "\n" + text, h);
    std::ostringstream os;
    os << stage << "-" << std::hex << h << ".json";
    return os.str();
}

std::optional<Json> cache_get(const PipelineConfig& cfg, const std::string& key) {
    if (cfg.cache_dir.empty()) return std::nullopt;
    std::ifstream f(std::filesystem::path(cfg.cache_dir) / key);
    if (!f) return std::nullopt;
    try {
        return Json::parse(f);
    } catch (...) {
        return std::nullopt;  // corrupt entry: recompute
    }
}

void cache_put(const PipelineConfig& cfg, const std::string& key, const Json& j) {
    if (cfg.cache_dir.empty()) return;
    std::filesystem::create_directories(cfg.cache_dir);
    auto path = std::filesystem::path(cfg.cache_dir) / key;
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp);
        f << j.dump();
    }
    std::filesystem::rename(tmp, path);
}

std::string fixture_stage(const FixtureSection& s) {
    std::string f = s.file;
    return f.substr(0, f.find('.'));
}

}  // namespace

std::vector<std::string> expand_stages(const std::vector<std::string>& requested) {
    size_t last = 0;
    bool any = false;
    for (auto& r : requested) {
        if (r == "all") {
            last = kStages.size() - 1;
            any = true;
            continue;
        }
        auto it = std::find(kStages.begin(), kStages.end(), r);
        if (it == kStages.end()) throw MuError("unknown stage '" + r + "'");
        last = std::max(last, size_t(it - kStages.begin()));
        any = true;
    }
    if (!any) throw MuError("no stages requested");
    return std::vector<std::string>(kStages.begin(), kStages.begin() + long(last) + 1);
}

bool Report::all_verified() const {
    for (auto& s : kStages)
        if (doc.contains(s) && doc[s]["status"] == "mismatch") return false;
    return true;
}

std::vector<std::string> Report::mismatches() const {
    std::vector<std::string> out;
    for (auto& s : kStages) {
        if (!doc.contains(s) || !doc[s].contains("checks")) continue;
        for (auto& c : doc[s]["checks"])
            if (c["status"] == "mismatch") {
                std::string line = s + "/" + c["name"].get<std::string>() + ": " + c["detail"].get<std::string>();
                for (auto& d : c["diff"]) line += "\n    " + d.get<std::string>();
                out.push_back(line);
            }
    }
    return out;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "mu-curves report v" << doc["version"].get<std::string>() << "\n";
    for (auto& s : kStages) {
        if (!doc.contains(s)) continue;
        const Json& st = doc[s];
        os << "\n[" << s << "] " << st["status"].get<std::string>() << "\n";
        if (st["status"] == "skipped") continue;
        for (auto& c : st["checks"]) {
            os << "  " << (c["status"] == "verified" ? "ok  " : "FAIL") << " " << c["name"].get<std::string>() << ": "
               << c["detail"].get<std::string>() << "\n";
            for (auto& d : c["diff"]) os << "        " << d.get<std::string>() << "\n";
        }
        const Json& p = st["payload"];
        if (s == "rep") os << "  U6 = <" << join(p["u6"].get<std::vector<std::string>>()) << ">\n";
        if (s == "net") os << "  F = " << p["double_conic"]["computed"].get<std::string>() << "\n";
        if (s == "deform") {
            for (auto& r : p["records"]) {
                std::vector<int> w = r["weights"].get<std::vector<int>>();
                os << "  " << r["scheme"].get<std::string>() << " " << r["label"].get<std::string>() << ": weights " << join_ints(w)
                   << "\n";
            }
            for (auto& n : p["notes"]) os << "  note: " << n.get<std::string>() << "\n";
        }
    }
    os << "\n";
    if (doc.contains("poincare") && doc["poincare"]["status"] != "skipped") {
        os << "P(H3) = " << doc["poincare"]["payload"]["h3_polynomial"].get<std::string>() << "\n";
        os << "P(H4) = " << doc["poincare"]["payload"]["h4_polynomial"].get<std::string>() << "\n";
    } else
        os << (all_verified() ? "all requested stages verified" : "mismatches found") << "\n";
    return os.str();
}

std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") return r.json();
    if (format == "text") return r.text();
    throw MuError("unknown report format '" + format + "'");
}

Report run_pipeline(const PipelineConfig& cfg) {
    if (!cfg.chart.empty() && std::find(chart_labels().begin(), chart_labels().end(), cfg.chart) == chart_labels().end())
        throw MuError("unknown chart '" + cfg.chart + "'");
    FixtureSet fx = FixtureSet::load_dir(cfg.fixture_dir.empty() ? default_fixture_dir() : cfg.fixture_dir);
    Context ctx(fx, cfg);
    auto stages = expand_stages(cfg.stages);
    Report r;
    r.doc["version"] = kReportVersion;
    r.doc["tool"] = "mu-curves";
    r.doc["config"] = {{"stages", stages}, {"chart", cfg.chart.empty() ? "all" : cfg.chart}};
    for (auto& s : kStages) {
        if (std::find(stages.begin(), stages.end(), s) == stages.end()) {
            r.doc[s] = {{"status", "skipped"}, {"payload", nullptr}};
            continue;
        }
        std::string key = cache_key(fx, cfg, s);
        if (auto hit = cache_get(cfg, key)) {
            if (cfg.verbosity > 0) std::cerr << "[" << s << "] cached\n";
            r.doc[s] = *hit;
            continue;
        }
        if (cfg.verbosity > 0) std::cerr << "[" << s << "] running\n";
        Json j;
        if (s == "rep") j = stage_rep(ctx);
        else if (s == "net") j = stage_net(ctx);
        else if (s == "variety") j = stage_variety(ctx);
        else if (s == "curves") j = stage_curves(ctx);
        else if (s == "deform") j = stage_deform(ctx);
        else j = stage_poincare(ctx, r.doc["deform"]);
        // round-trip so cold and cached runs serialize identically
        j = Json::parse(j.dump());
        cache_put(cfg, key, j);
        r.doc[s] = j;
    }
    r.doc["status"] = r.all_verified() ? "verified" : "mismatch";
    r.doc["mismatches"] = r.mismatches();
    return r;
}

bool FixtureVerdict::ok() const {
    if (checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["status"] == "verified"; });
}

FixtureVerdict verify_fixture(const PipelineConfig& cfg, const std::string& fixture) {
    FixtureSet fx = FixtureSet::load_dir(cfg.fixture_dir.empty() ? default_fixture_dir() : cfg.fixture_dir);
    FixtureVerdict v;
    v.fixture = fixture;
    v.stage = fixture_stage(fx.at(fixture));
    PipelineConfig c = cfg;
    c.stages = {v.stage};
    Report r = run_pipeline(c);
    for (auto& ch : r.doc[v.stage]["checks"])
        if (ch["fixture"] == fixture) v.checks.push_back(ch);
    if (v.checks.empty()) throw MuError("no check reads fixture '" + fixture + "'");
    return v;
}

}  // namespace mu
