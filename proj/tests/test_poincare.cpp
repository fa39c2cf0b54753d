#include <doctest.h>

#include <random>

#include "mu/poincare.hpp"
#include "mu/poly.hpp"

using namespace mu;

namespace {

std::vector<FixedPointRecord> h4() {
    return {{"4L2", {6, 4, 4, 2}},      {"L2^2+Q", {6, 2, 2, -2}},      {"C4", {4, 2, -2, -4}},
            {"L2+L-2+Q", {4, 2, -2, -4}}, {"L-2^2+Q", {2, -2, -2, -6}}, {"4L-2", {-2, -4, -4, -6}}};
}

}  // namespace

TEST_CASE("Poincare polynomials of H3 and H4 (oracle values)") {
    std::vector<FixedPointRecord> h3 = {{"p-3", {6, 4, 2}}, {"p-1", {4, 2, -2}}, {"p1", {2, -2, -4}}, {"p3", {-2, -4, -6}}};
    PoincarePolynomial P3 = assemble(h3), P4 = assemble(h4());
    CHECK(P3.coeffs == std::vector<long>{1, 1, 1, 1});
    CHECK(P4.coeffs == std::vector<long>{1, 1, 2, 1, 1});
    CHECK(P3.str() == "1 + p + p^2 + p^3");
    CHECK(P4.str() == "1 + p + 2p^2 + p^3 + p^4");
    CHECK(P4.total() == 6);
    CHECK(mirror_closed(h3));
    CHECK(smoothness_audit(h4(), 4));
}

TEST_CASE("zero weights and wrong dimensions are rejected") {
    auto recs = h4();
    recs[0].weights[3] = 0;
    CHECK_THROWS_AS(assemble(recs), MuError);
    std::string why;
    CHECK_FALSE(smoothness_audit(recs, 4, &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(smoothness_audit(h4(), 3));
}

TEST_CASE("property: mirror-closed weight sets give palindromic polynomials") {
    std::mt19937 rng(8);
    for (int k = 0; k < 50; ++k) {
        int n = 1 + int(rng() % 5), dim = 1 + int(rng() % 5);
        // a projective variety has an attracting and a repelling fixed point
        FixedPointRecord top{"top", std::vector<int>(size_t(dim), 2)};
        std::vector<FixedPointRecord> recs{top, weyl_mirror(top)};
        for (int i = 0; i < n; ++i) {
            FixedPointRecord r{"x" + std::to_string(i), {}};
            for (int j = 0; j < dim; ++j) {
                int a = 1 + int(rng() % 6);
                r.weights.push_back(rng() % 2 ? 2 * a : -2 * a);
            }
            recs.push_back(r);
            recs.push_back(weyl_mirror(r));
        }
        CHECK(mirror_closed(recs));
        PoincarePolynomial P = assemble(recs);
        CHECK(P.palindromic());
        CHECK(P.total() == long(recs.size()));
    }
}

TEST_CASE("mirror of a record") {
    FixedPointRecord r{"C", {4, 2, -2, -6}};
    FixedPointRecord m = weyl_mirror(r);
    CHECK(m.label == "C'");
    CHECK(m.weights == std::vector<int>{6, 2, -2, -4});
    CHECK(r.negative_count() == 2);
    CHECK(m.negative_count() == 2);
}
