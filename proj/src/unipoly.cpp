#include "mu/unipoly.hpp"

namespace mu {

UniPoly UniPoly::x_plus(const Rational& a) { return UniPoly({a, Rational(1)}); }

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o * Rational(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UniPoly r;
    r.c.resize(c.size() + o.c.size() - 1);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const Rational& s) const {
    UniPoly r = *this;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational s = 0;
    for (size_t i = c.size(); i-- > 0;) s = s * x + c[i];
    return s;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / c.back());
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t k = c.size(); k-- > 0;) {
        Rational a = c[k];
        if (a == 0) continue;
        bool neg = a < 0;
        if (neg) a = -a;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty())
            s += to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += to_string(a) + "*" + mono;
    }
    return s;
}

UniPoly binomial_poly(const Rational& a, int k) {
    UniPoly r({Rational(1)});
    Rational fact = 1;
    for (int i = 0; i < k; ++i) {
        r = r * UniPoly::x_plus(a - i);
        fact *= (i + 1);
    }
    return r * (Rational(1) / fact);
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw MuError("polynomial division by zero");
    r = a;
    q = UniPoly();
    if (a.degree() < b.degree()) return;
    q.c.assign(a.degree() - b.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rational f = r.c.back() / b.c.back();
        q.c[d] = f;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i + d] -= f * b.c[i];
        r.trim();
    }
    q.trim();
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace mu
