#include <doctest.h>

#include "mu/sl2.hpp"
#include "mu/skew_net.hpp"
#include "support.hpp"

using namespace mu;

namespace {

PolyMatrix random_skew(std::mt19937& rng, int n, const Ring& R) {
    PolyMatrix M(n, std::vector<MultiPoly>(n, MultiPoly(R)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            M[i][j] = MultiPoly::constant(R, test::random_rational(rng));
            M[j][i] = -M[i][j];
        }
    return M;
}

}  // namespace

TEST_CASE("property: pf^2 = det on 20 random skew matrices") {
    std::mt19937 rng(17);
    Ring R = make_ring({"x"});
    for (int k = 0; k < 20; ++k) {
        int n = 2 * (1 + k % 4);  // 2, 4, 6, 8
        PolyMatrix M = random_skew(rng, n, R);
        MultiPoly pf = pfaffian(M);
        CHECK(pf * pf == determinant(M));
    }
    // symbolic: a 4x4 skew matrix in six letters
    Ring S = make_ring({"a", "b", "c", "d", "e", "f"});
    auto v = [&](const char* s) { return parse_poly(s, S); };
    MultiPoly z(S);
    PolyMatrix A = {{z, v("a"), v("b"), v("c")}, {-v("a"), z, v("d"), v("e")}, {-v("b"), -v("d"), z, v("f")},
                    {-v("c"), -v("e"), -v("f"), z}};
    CHECK(pfaffian(A) == v("a*f - b*e + c*d"));
    CHECK(pfaffian(A).pow(2) == determinant(A));
}

TEST_CASE("the printed net: skew, weight-graded, and its Pfaffians") {
    SkewNet net = test::printed_net();
    CHECK(net.skew());
    // slot s pairs w_i with w_j only when wt_i + wt_j = -(slot weight)
    for (int s = 0; s < 3; ++s)
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                if (net.m[s](i, j) != 0) CHECK(kUWeights[i] + kUWeights[j] == SkewNet::slot_weight(s));
    auto pfs = principal_pfaffians(net);
    REQUIRE(pfs.size() == 7);
    Ring Y = y_ring();
    // frozen from tests/oracle/oracle_net.py
    const char* want[] = {"18/5*y_m2^3", "54/5*y0*y_m2^2", "54/25*y0^2*y_m2 + 54/25*y2*y_m2^2",
                          "9/25*y0^3 + 54/25*y2*y0*y_m2", "54/25*y2*y0^2 + 54/25*y2^2*y_m2", "54/5*y2^2*y0", "18/5*y2^3"};
    for (auto* w : want) {
        MultiPoly p = parse_poly(w, Y);
        CHECK(std::count(pfs.begin(), pfs.end(), p) == 1);
    }
    auto& ps = test::fixtures().at("pfaffians");
    std::vector<MultiPoly> printed;
    for (auto& g : ps.polys("gen", ps.ring())) printed.push_back(g.map_to(Y));
    CHECK(ideal_equal(principal_pfaffian_ideal(net), Ideal(Y, printed)));
}

TEST_CASE("apolar quartic of the Pfaffian cubics is a double smooth conic (oracle value)") {
    auto pfs = principal_pfaffians(test::printed_net());
    MultiPoly F = apolar_quartic(pfs);
    Ring Z = z_ring();
    MultiPoly want = parse_poly("(z0^2 - z2*z_m2)^2", Z);  // tests/oracle/oracle_net.py
    Rational s = want.lead().c / F.lead().c;
    CHECK(F * s == want);
    auto Q = square_root_up_to_scalar(F);
    REQUIRE(Q.has_value());
    CHECK(smooth_conic(*Q));
    for (auto& g : pfs) CHECK(apply_differential(g, F).is_zero());
    auto ann = apolar_forms(F, 3);
    CHECK(ann.size() == 7);
    // the printed double conic is not annihilated by the Pfaffians (recorded mismatch)
    MultiPoly printed = parse_poly("(z2*z_m2 + 1/4*z0^2)^2", Z);
    int killed = 0;
    for (auto& g : pfs) killed += apply_differential(g, printed).is_zero();
    CHECK(killed == 4);
    CHECK_FALSE(square_root_up_to_scalar(parse_poly("z0^4 + z2^4", Z)).has_value());
    CHECK_FALSE(smooth_conic(parse_poly("z0^2 - z2^2", Z)));
}

TEST_CASE("net_from_forms reproduces the printed eta") {
    // forms as in tests/oracle/oracle_net.py, indices into w6 .. w_m6 (1-based)
    RepPtr W = sym_power_std(3), S = sym2(W);
    std::vector<RepVector> u6;
    for (auto& w : test::u6_quadrics()) u6.push_back(poly_to_sym2(w, S, {"u3", "u1", "u_m1", "u_m3"}));
    std::vector<std::string> lab;
    for (int k = 6; k >= -6; k -= 2) lab.push_back(weight_label("w", k));
    RepPtr A = wedge2(dual(subrep(S, u6, lab)));
    auto hw = highest_weight_vectors(A, 2);
    REQUIRE(hw.size() == 1);
    RepVector g1 = hw[0];
    int k = A->index_of("w4*^w_m6*");
    REQUIRE(k >= 0);
    g1 = g1 * (Rational(-3, 5) / g1.c[k]);
    RepVector g2 = g1.f() * Rational(1, 2), g3 = g2.f();
    SkewNet net = net_from_forms({g1, g2, g3});
    SkewNet printed = test::printed_net();
    for (int s = 0; s < 3; ++s) CHECK(net.m[s] == printed.m[s]);
}
