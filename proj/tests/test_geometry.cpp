#include <doctest.h>

#include "mu/chart.hpp"
#include "mu/curves.hpp"
#include "support.hpp"

using namespace mu;

TEST_CASE("chart weights and labels") {
    Chart c = make_chart("p12");
    CHECK(c.pinned == std::array<int, 3>{0, 1, 2});
    CHECK(c.wts.at("a1") == 6);
    CHECK(c.wts.at("a4") == 12);
    CHECK(c.wts.at("a9") == 2);
    Chart b = make_chart("p10");
    CHECK(b.wts.at("b9") == -2);
    CHECK(b.wts.at("b12") == 6);
    CHECK(mirror_label("p10") == "p-10");
    CHECK(chart_labels().size() == 4);
}

TEST_CASE("V12 is affine 3-space with the oracle's parameterization") {
    const ChartParam& cp = test::charts().at("p12");
    CHECK(cp.is_affine_space());
    CHECK(cp.free == std::vector<std::string>{"a9", "a10", "a11"});
    // frozen from tests/oracle/oracle_variety.py
    std::map<std::string, std::string> want = {
        {"a1", "a11/10"}, {"a5", "-a10/6"}, {"a6", "-a11/5"},
        {"a2", "-3/4*a10^2 + 9/10*a11*a9"}, {"a12", "-5/12*a10^2 + 1/2*a11*a9"},
        {"a4", "-5/4*a10^3 + 3/2*a10*a11*a9 - 1/5*a11^2"},
        {"a8", "1/2*a10^2*a9 + 1/15*a10*a11 - 3/5*a11*a9^2"}};
    for (auto& [v, e] : want) CHECK(cp.sub.at(v) == parse_poly(e, cp.free_ring));
    auto& s = test::fixtures().at("v12_equations");
    std::vector<MultiPoly> printed;
    for (auto& g : s.polys("gen", cp.chart.ring)) printed.push_back(g);
    CHECK(ideal_equal(Ideal(cp.chart.ring, printed), Ideal(cp.chart.ring, chart_equations(cp.chart, test::printed_net()))));
}

TEST_CASE("V10 has a single cubic residual relation (oracle value)") {
    const ChartParam& cp = test::charts().at("p10");
    CHECK(cp.free == std::vector<std::string>{"b8", "b9", "b10", "b12"});
    REQUIRE(cp.residual.size() == 1);
    MultiPoly want = parse_poly("90*b8*b9^2 - 5*b10^3 - 27*b9*b10*b12 + 108*b12", cp.free_ring);
    CHECK(ideal_equal(cp.residual_ideal(), Ideal(cp.free_ring, {want})));
    CHECK(weight_of(want, cp.wts) == 6);
}

TEST_CASE("mirror symmetry of the charts") {
    auto& cs = test::charts();
    for (auto [a, b] : {std::pair<std::string, std::string>{"p12", "p-12"}, {"p10", "p-10"}}) {
        SkewNet net = test::printed_net();
        std::vector<MultiPoly> m;
        for (auto& e : chart_equations(cs.at(a).chart, net)) m.push_back(mirror_poly(e, cs.at(a).chart, cs.at(b).chart));
        CHECK(ideal_equal(Ideal(cs.at(b).chart.ring, m), Ideal(cs.at(b).chart.ring, chart_equations(cs.at(b).chart, net))));
    }
}

TEST_CASE("property: universal cubics at random points of V12 have Hilbert polynomial 3m+1") {
    std::mt19937 rng(31337);
    const ChartParam& cp = test::charts().at("p12");
    auto w = test::u6_quadrics();
    for (int k = 0; k < 6; ++k) {
        std::map<std::string, Rational> pt;
        for (auto& v : cp.free) pt[v] = test::random_rational(rng);
        Ideal C = universal_cubic(chart_point_at(cp, pt), w);
        CHECK(hilbert_polynomial(C) == UniPoly({1, 3}));
    }
}

TEST_CASE("symbolic universal cubic over V12 is the minor ideal of the printed matrix") {
    const ChartParam& cp = test::charts().at("p12");
    auto& um = test::fixtures().at("v12_universal");
    Ring Rf = cubic_ring(cp.free_ring);
    PolyMatrix M = um.matrix("row", um.ring());
    std::map<std::string, MultiPoly> sub;
    for (auto& [v, e] : cp.sub) sub.emplace(v, e.map_to(Rf));
    std::vector<MultiPoly> minors;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) minors.push_back(substitute(M[i][0] * M[j][1] - M[i][1] * M[j][0], sub, Rf));
    Ideal C = universal_cubic(cp.point(), test::u6_quadrics());
    CHECK(ideal_equal(C, Ideal(Rf, minors).map_to(C.ring())));
}

TEST_CASE("Plucker degrees and isotropy of the fixed families (oracle values)") {
    auto& fx = test::fixtures();
    SkewNet net = test::printed_net();
    std::map<std::string, int> want = {{"family_quartic", 4}, {"family_conic", 2}, {"family_sextic", 6}};
    for (auto& [name, d] : want) {
        auto& s = fx.at(name);
        PolyMatrix P = s.matrix("row", s.ring());
        CHECK(family_isotropy(P, net).empty());
        CHECK(plucker_degree(P).degree == d);
    }
    auto& l = fx.at("family_l1_m1");
    PolyMatrix P = l.matrix("row", l.ring());
    CHECK(family_isotropy(P, net).empty());
    DegreeInfo d = plucker_degree(specialize(P, {{"a", 0}}, make_ring({"t"})));
    CHECK(d.degree == 1);
    CHECK(d.minor_gcd == UniPoly({0, 0, 0, 0, 1}));
}

TEST_CASE("property: a perturbed family is no longer isotropic") {
    auto& s = test::fixtures().at("family_quartic");
    SkewNet net = test::printed_net();
    PolyMatrix P = s.matrix("row", s.ring());
    for (auto [i, j] : {std::pair{0, 6}, {1, 4}, {2, 5}}) {
        PolyMatrix Q = P;
        Q[i][j] += MultiPoly::constant(Q[i][j].ring(), 1);
        CHECK_FALSE(family_isotropy(Q, net).empty());
    }
}

TEST_CASE("fixed-curve catalog: sizes, degrees, mirror closure") {
    auto& cat = test::catalog();
    int h3 = 0, h4 = 0;
    for (auto& c : cat) (c.scheme == "H3" ? h3 : h4)++;
    CHECK(h3 == 4);
    CHECK(h4 == 6);
    auto w = test::u6_quadrics();
    std::map<std::string, int> deg = {{"C4", 4}, {"4L2", 4}, {"p-3", 3}, {"L2^2+Q", 4}};
    for (auto& [label, d] : deg) CHECK(curve_degree(test::curve(label), test::charts(), w).degree == d);
    auto& cs = test::charts();
    for (auto& c : cat) {
        const ChartParam& from = cs.at("p10");
        const ChartParam& to = cs.at("p-10");
        Ideal I = curve_ideal(c, from, cs, w);
        CHECK(ideal_equal(mirror_ideal(I, from, to), curve_ideal(test::curve(c.mirror), to, cs, w)));
    }
}

TEST_CASE("printed fixed-curve ideals on the charts") {
    auto& cs = test::charts();
    auto w = test::u6_quadrics();
    for (auto name : {"triple_line", "line_conic", "thick_line", "line_square_conic"}) {
        auto& s = test::fixtures().at(name);
        const ChartParam& cp = cs.at(s.get("chart"));
        std::vector<MultiPoly> g = cp.residual;
        for (auto& f : s.polys("gen", cp.chart.ring)) g.push_back(cp.to_free(f));
        CHECK_MESSAGE(ideal_equal(curve_ideal(test::curve(s.get("curve")), cp, cs, w), Ideal(cp.free_ring, g)), name);
    }
}

TEST_CASE("chart transitions are compatible with transport") {
    auto& cs = test::charts();
    const ChartParam& from = cs.at("p12");
    Transition tr = make_transition(from, cs.at("p10").chart);
    CHECK_FALSE(tr.d.is_zero());
    // a coordinate of p10 transported to p12 and back to the matrix: P10 ~ P12 up to row operations
    auto [num, e] = transport(parse_poly("b9", cs.at("p10").chart.ring), tr, from.free_ring);
    CHECK(e >= 0);
    CHECK(weight_of(tr.d, from.wts).has_value());
}
