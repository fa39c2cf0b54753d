#include <doctest.h>

#include "mu/groebner.hpp"
#include "mu/module.hpp"
#include "mu/monomial_ideal.hpp"
#include "support.hpp"

using namespace mu;

namespace {

Ring xyz() { return make_ring({"x", "y", "z"}); }

std::vector<MultiPoly> twisted_cubic(const Ring& R) {
    return {parse_poly("x*z - y^2", R), parse_poly("x*w - y*z", R), parse_poly("y*w - z^2", R)};
}

}  // namespace

TEST_CASE("reduced Groebner basis of a small ideal") {
    Ring R = xyz()->with_order(Order::Lex);
    auto gb = buchberger({parse_poly("x^2 + y + z - 1", R), parse_poly("x + y^2 + z - 1", R), parse_poly("x + y + z^2 - 1", R)});
    CHECK(gb.reduced);
    CHECK(spolys_reduce_to_zero(gb));
    // the lex basis ends in a univariate polynomial of degree 6 in z
    const MultiPoly& last = gb.basis.front();
    CHECK(last.degree_in(2) == 6);
    CHECK_FALSE(last.uses(0));
    CHECK(quotient_dimension(Ideal(R, gb.basis)) == 8);
}

TEST_CASE("property: S-polynomials of computed bases vanish") {
    std::mt19937 rng(2024);
    Ring R = make_ring({"a", "b", "c", "d"});
    for (int k = 0; k < 12; ++k) {
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(test::random_poly(rng, R, 3, 2));
        auto gb = buchberger(gens);
        CHECK(spolys_reduce_to_zero(gb));
        for (auto& g : gens) CHECK(gb.contains(g));
    }
}

TEST_CASE("parallel normal forms agree with the serial reference") {
    std::mt19937 rng(3);
    Ring R = make_ring({"a", "b", "c", "d"});
    auto gb = buchberger({parse_poly("a*b - c^2", R), parse_poly("b*d - a", R), parse_poly("c^3 - d", R)});
    std::vector<MultiPoly> fs;
    for (int k = 0; k < 40; ++k) fs.push_back(test::random_poly(rng, R, 5, 4));
    CHECK(normal_forms(fs, gb, true) == normal_forms(fs, gb, false));
    GbOptions par;
    par.parallel = true;
    auto g2 = buchberger({parse_poly("a*b - c^2", R), parse_poly("b*d - a", R), parse_poly("c^3 - d", R)}, par);
    CHECK(g2.basis == gb.basis);
}

TEST_CASE("ideal operations on the twisted cubic") {
    Ring R = make_ring({"x", "y", "z", "w"});
    Ideal C(R, twisted_cubic(R));
    CHECK(is_homogeneous(C));
    CHECK(hilbert_polynomial(C) == UniPoly({1, 3}));
    CHECK(krull_dimension(C) == 2);
    // saturation by the irrelevant ideal changes nothing
    Ideal m(R, {parse_poly("x", R), parse_poly("y", R), parse_poly("z", R), parse_poly("w", R)});
    CHECK(ideal_equal(saturate(C, m), C));
    // a plane section: three points
    Ideal P = C + Ideal(R, {parse_poly("x - w", R)});
    CHECK(hilbert_polynomial(P) == UniPoly({3}));
    // x^2 * something is in C only through the generators
    CHECK(ideal_contains(C, Ideal(R, {parse_poly("x*z - y^2", R) * parse_poly("x + w", R)})));
    CHECK_FALSE(ideal_contains(C, Ideal(R, {parse_poly("x*w", R)})));
}

TEST_CASE("intersection, quotient and saturation") {
    Ring R = xyz();
    Ideal I(R, {parse_poly("x", R), parse_poly("y", R)}), J(R, {parse_poly("y", R), parse_poly("z", R)});
    Ideal K = intersect(I, J);
    CHECK(ideal_equal(K, Ideal(R, {parse_poly("y", R), parse_poly("x*z", R)})));
    CHECK(ideal_equal(quotient(K, parse_poly("z", R)), I));
    Ideal E(R, {parse_poly("x^2*y", R), parse_poly("x^3", R)});
    CHECK(ideal_equal(saturate(E, parse_poly("x", R)), Ideal(R, {MultiPoly::constant(R, 1)})));
    int it = 0;
    CHECK(is_unit_ideal(saturate_iterated(E, parse_poly("x", R), &it)));
    CHECK(it >= 1);
    CHECK(ideal_equal(eliminate(Ideal(R, {parse_poly("x - y^2", R), parse_poly("z - y^3", R)}), {"y"}),
                      Ideal(make_ring({"x", "z"}), {parse_poly("x^3 - z^2", make_ring({"x", "z"}))})));
}

TEST_CASE("property: syzygies dot the generators to zero") {
    std::mt19937 rng(99);
    Ring R = make_ring({"a", "b", "c"});
    for (int k = 0; k < 10; ++k) {
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(test::random_poly(rng, R, 2, 2));
        for (auto& s : syzygies(gens)) CHECK(dot(s, gens).is_zero());
    }
    Ring S = make_ring({"x", "y", "z", "w"});
    auto tc = twisted_cubic(S);
    auto syz = syzygies(tc);
    CHECK(syz.size() == 2);  // Hilbert-Burch: two linear syzygies
    for (auto& s : syz) {
        CHECK(dot(s, tc).is_zero());
        for (auto& e : s.entries) CHECK(e.total_degree() <= 1);
    }
}

TEST_CASE("module kernel and lifting") {
    Ring R = xyz();
    std::vector<MultiPoly> g{parse_poly("x", R), parse_poly("y", R)};
    Lifter L(g);
    auto c = L.lift(parse_poly("x*z + y^2", R));
    REQUIRE(c.has_value());
    CHECK((*c)[0] * g[0] + (*c)[1] * g[1] == parse_poly("x*z + y^2", R));
    CHECK_FALSE(L.lift(parse_poly("z", R)).has_value());
    // {v in R/<xy> : x v = 0}: generated by y
    auto K = module_kernel({{parse_poly("x", R)}}, Ideal(R, {parse_poly("x*y", R)}));
    REQUIRE(K.size() == 1);
    CHECK(K[0].entries[0] == parse_poly("y", R));
}

TEST_CASE("monomial ideals: Stanley decomposition and weight spaces") {
    // <x^2, x*y> in k[x, y, z]
    Exp a, b;
    a[0] = 2;
    b[0] = 1;
    b[1] = 1;
    auto pieces = stanley_decomposition({a, b}, 3);
    CHECK(hilbert_polynomial_monomial({a, b}, 3) == UniPoly({2, 1}));  // a plane plus an embedded line: m + 2
    CHECK(hilbert_function_monomial({a, b}, 3, 2) == 4);               // y^2, yz, z^2, xz
    CHECK(krull_dimension_monomial({a, b}, 3) == 2);
    std::vector<int> w{1, 2, 3};
    CHECK(finite_weight_spaces(pieces, w));
    auto m = standard_monomials_of_weight(pieces, w, 4, 3);
    CHECK(m.size() == 2);  // y^2 and x*z
}
