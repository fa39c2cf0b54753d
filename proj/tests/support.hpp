#pragma once
// shared fixtures for the unit tests

#include <random>

#include "mu/curves.hpp"
#include "mu/fixtures.hpp"
#include "mu/skew_net.hpp"

namespace mu::test {

inline const FixtureSet& fixtures() {
    static const FixtureSet fx = FixtureSet::load_dir(default_fixture_dir());
    return fx;
}

inline SkewNet printed_net() {
    auto& s = fixtures().at("eta");
    Ring Y = y_ring();
    PolyMatrix M = s.matrix("row", s.ring());
    SkewNet net;
    for (auto& m : net.m) m = QMatrix(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            MultiPoly p = M[i][j].map_to(Y);
            for (int k = 0; k < 3; ++k) {
                Exp e;
                e[k] = 1;
                net.m[k](i, j) = p.coeff(e);
            }
        }
    return net;
}

inline std::vector<MultiPoly> u6_quadrics() {
    auto& s = fixtures().at("u6");
    std::vector<MultiPoly> out;
    for (auto& g : s.polys("gen", s.ring())) out.push_back(g.map_to(u_ring()));
    return out;
}

inline const ChartSet& charts() {
    static const ChartSet cs = build_chart_set(printed_net());
    return cs;
}

inline CatalogInputs catalog_inputs() {
    auto& fx = fixtures();
    CatalogInputs in;
    in.quartic = fx.at("family_quartic").matrix("row", fx.at("family_quartic").ring());
    in.conic = fx.at("family_conic").matrix("row", fx.at("family_conic").ring());
    Ring B = charts().at("p10").chart.ring;
    for (auto& g : fx.at("thick_line").polys("gen", B)) in.thick_line.push_back(g);
    for (auto& g : fx.at("line_square_conic").polys("gen", B)) in.line_square_conic.push_back(g);
    return in;
}

inline const std::vector<FixedCurve>& catalog() {
    static const std::vector<FixedCurve> c = fixed_curve_catalog(catalog_inputs(), charts());
    return c;
}

inline const FixedCurve& curve(const std::string& label) {
    for (auto& c : catalog())
        if (c.label == label) return c;
    throw MuError("no curve " + label);
}

inline Rational random_rational(std::mt19937& rng, int num = 9, int den = 4) {
    Rational q(long(rng() % (2 * num + 1)) - num, long(rng() % den) + 1);
    q.canonicalize();
    return q;
}

// random polynomial with `terms` terms of degree <= deg
inline MultiPoly random_poly(std::mt19937& rng, const Ring& r, int terms, int deg) {
    MultiPoly p(r);
    for (int t = 0; t < terms; ++t) {
        Exp e;
        int d = int(rng() % (deg + 1));
        for (int k = 0; k < d; ++k) e[int(rng() % r->nvars())]++;
        p += MultiPoly::monomial(r, e, random_rational(rng));
    }
    return p;
}

}  // namespace mu::test
