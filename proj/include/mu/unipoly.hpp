#pragma once
// Univariate polynomials over Q (Hilbert polynomials, binary-form gcds).

#include <string>
#include <vector>

#include "mu/poly.hpp"

namespace mu {

struct UniPoly {
    std::vector<Rational> c;  // c[i] * x^i, no trailing zeros

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> v) : c(std::move(v)) { trim(); }
    static UniPoly x_plus(const Rational& a);  // x + a

    void trim();
    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c == o.c; }
    Rational operator()(const Rational& x) const;
    UniPoly monic() const;
    std::string str(const std::string& var = "m") const;
};

// binomial(x + a, k) as a polynomial in x
UniPoly binomial_poly(const Rational& a, int k);
void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace mu
