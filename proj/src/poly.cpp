#include "mu/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mu {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s) {
    Rational q;
    if (q.set_str(std::string(s), 10) != 0) throw MuError("bad rational: " + std::string(s));
    q.canonicalize();
    if (q.get_den() == 0) throw MuError("zero denominator: " + std::string(s));
    return q;
}

int total_degree(const Exp& a, int n) {
    int d = 0;
    for (int i = 0; i < n; ++i) d += a[i];
    return d;
}

bool divides(const Exp& a, const Exp& b, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp lcm(const Exp& a, const Exp& b, int n) {
    Exp r;
    for (int i = 0; i < n; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exp mul(const Exp& a, const Exp& b, int n) {
    Exp r;
    for (int i = 0; i < n; ++i) {
        unsigned v = unsigned(a[i]) + b[i];
        if (v > 0xffff) throw MuError("exponent overflow");
        r[i] = uint16_t(v);
    }
    return r;
}

Exp quot(const Exp& b, const Exp& a, int n) {
    Exp r;
    for (int i = 0; i < n; ++i) r[i] = uint16_t(b[i] - a[i]);
    return r;
}

bool coprime(const Exp& a, const Exp& b, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

uint64_t divmask(const Exp& a, int n) {
    uint64_t m = 0;
    for (int i = 0; i < n; ++i)
        if (a[i]) m |= uint64_t(1) << i;
    return m;
}

PolyRing::PolyRing(std::vector<std::string> names, Order order, int block)
    : names_(std::move(names)), order_(order), block_(block) {
    if (int(names_.size()) > kMaxVars) throw MuError("too many variables");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw MuError("duplicate variable names");
    if (order_ == Order::Block && (block_ < 0 || block_ > int(names_.size())))
        throw MuError("bad block split");
}

std::optional<int> PolyRing::index(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

int PolyRing::require(std::string_view name) const {
    auto i = index(name);
    if (!i) throw MuError("unknown variable: " + std::string(name));
    return *i;
}

static int grevlex_range(const Exp& a, const Exp& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

int PolyRing::cmp(const Exp& a, const Exp& b) const {
    const int n = nvars();
    switch (order_) {
        case Order::Lex:
            for (int i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case Order::Grevlex:
            return grevlex_range(a, b, 0, n);
        case Order::Block: {
            int c = grevlex_range(a, b, 0, block_);
            if (c) return c;
            return grevlex_range(a, b, block_, n);
        }
    }
    return 0;
}

Ring PolyRing::with_order(Order o, int block) const { return make_ring(names_, o, block); }

Ring make_ring(std::vector<std::string> names, Order order, int block) {
    return std::make_shared<const PolyRing>(std::move(names), order, block);
}

// ---- MultiPoly ----

MultiPoly MultiPoly::constant(Ring r, const Rational& c) {
    MultiPoly p(std::move(r));
    if (c != 0) p.t_.push_back({Exp{}, c});
    return p;
}

MultiPoly MultiPoly::var(Ring r, int i) {
    Exp m;
    m[i] = 1;
    return monomial(std::move(r), m, 1);
}

MultiPoly MultiPoly::var(Ring r, std::string_view name) {
    int i = r->require(name);
    return var(std::move(r), i);
}

MultiPoly MultiPoly::monomial(Ring r, const Exp& m, const Rational& c) {
    MultiPoly p(std::move(r));
    if (c != 0) p.t_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(Ring r, std::vector<Term> terms) {
    MultiPoly p(r);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r->cmp(a.m, b.m) > 0; });
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m)
            p.t_.back().c += t.c;
        else {
            if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
    return p;
}

bool MultiPoly::is_constant() const {
    if (t_.empty()) return true;
    return t_.size() == 1 && mu::total_degree(t_[0].m, ring_->nvars()) == 0;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, mu::total_degree(t.m, ring_->nvars()));
    return d;
}

int MultiPoly::degree_in(int v) const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, int(t.m[v]));
    return d;
}

bool MultiPoly::uses(int v) const {
    for (auto& t : t_)
        if (t.m[v]) return true;
    return false;
}

Rational MultiPoly::coeff(const Exp& m) const {
    for (auto& t : t_)
        if (t.m == m) return t.c;
    return 0;
}

Rational MultiPoly::constant_term() const { return coeff(Exp{}); }

static void check_ring(const Ring& a, const Ring& b) {
    if (a.get() != b.get() && !(a && b && a->same_vars(*b) && a->order() == b->order() && a->block() == b->block()))
        throw MuError("ring mismatch");
}

MultiPoly add_scaled(const MultiPoly& f, const MultiPoly& g, const Rational& c, const Exp* m) {
    check_ring(f.ring_, g.ring_);
    MultiPoly r(f.ring_);
    if (c == 0 || g.t_.empty()) {
        r.t_ = f.t_;
        return r;
    }
    const auto& R = *f.ring_;
    const int n = R.nvars();
    r.t_.reserve(f.t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    Exp gm;
    auto gexp = [&](size_t k) -> const Exp& {
        if (!m) return g.t_[k].m;
        gm = mul(g.t_[k].m, *m, n);
        return gm;
    };
    while (i < f.t_.size() || j < g.t_.size()) {
        if (j == g.t_.size()) {
            r.t_.push_back(f.t_[i++]);
            continue;
        }
        const Exp& ge = gexp(j);
        if (i == f.t_.size()) {
            r.t_.push_back({ge, c * g.t_[j].c});
            ++j;
            continue;
        }
        int s = R.cmp(f.t_[i].m, ge);
        if (s > 0)
            r.t_.push_back(f.t_[i++]);
        else if (s < 0) {
            r.t_.push_back({ge, c * g.t_[j].c});
            ++j;
        } else {
            Rational v = f.t_[i].c + c * g.t_[j].c;
            if (v != 0) r.t_.push_back({ge, v});
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const { return add_scaled(*this, o, 1); }
MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return add_scaled(*this, o, -1); }

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    r.t_ = t_;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Rational(-1); }

MultiPoly MultiPoly::mul_term(const Exp& m, const Rational& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    const int n = ring_->nvars();
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({mul(t.m, m, n), t.c * c});
    return r;  // multiplication by a monomial preserves the order
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_ring(ring_, o.ring_);
    if (t_.empty() || o.t_.empty()) return MultiPoly(ring_);
    const MultiPoly& a = t_.size() >= o.t_.size() ? *this : o;
    const MultiPoly& b = t_.size() >= o.t_.size() ? o : *this;
    if (b.t_.size() == 1) return a.mul_term(b.t_[0].m, b.t_[0].c);
    const int n = ring_->nvars();
    std::vector<Term> all;
    all.reserve(a.t_.size() * b.t_.size());
    for (auto& x : a.t_)
        for (auto& y : b.t_) all.push_back({mul(x.m, y.m, n), x.c * y.c});
    return from_terms(ring_, std::move(all));
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw MuError("negative power");
    MultiPoly r = constant(ring_, 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (t_.empty()) return *this;
    Rational inv = 1 / t_[0].c;
    return *this * inv;
}

MultiPoly MultiPoly::diff(int v) const {
    std::vector<Term> out;
    for (auto& t : t_)
        if (t.m[v]) {
            Term u = t;
            u.c *= t.m[v];
            u.m[v] -= 1;
            out.push_back(u);
        }
    return from_terms(ring_, std::move(out));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    if (!ring_->same_vars(*o.ring_)) return false;
    if (ring_.get() != o.ring_.get() && ring_->order() != o.ring_->order()) return (*this - o.map_to(ring_)).is_zero();
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

MultiPoly MultiPoly::map_to(const Ring& target) const {
    const int n = ring_->nvars();
    std::vector<int> idx(n, -1);
    for (int i = 0; i < n; ++i) {
        auto j = target->index(ring_->name(i));
        if (j) idx[i] = *j;
    }
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        Term u;
        u.c = t.c;
        for (int i = 0; i < n; ++i)
            if (t.m[i]) {
                if (idx[i] < 0) throw MuError("variable " + ring_->name(i) + " missing in target ring");
                u.m[idx[i]] = t.m[i];
            }
        out.push_back(std::move(u));
    }
    return from_terms(target, std::move(out));
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    const int n = ring_->nvars();
    bool first = true;
    for (auto& t : t_) {
        Rational c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (int i = 0; i < n; ++i)
            if (t.m[i]) {
                if (!mono.empty()) mono += "*";
                mono += ring_->name(i);
                if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
            }
        if (mono.empty())
            s += to_string(c);
        else if (c == 1)
            s += mono;
        else
            s += to_string(c) + "*" + mono;
    }
    return s;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw MuError("division by zero polynomial");
    const Ring& R = f.ring();
    const int n = R->nvars();
    MultiPoly rem = f, q(R);
    const Term& lg = g.lead();
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        if (!divides(lg.m, lt.m, n)) throw MuError("inexact division");
        Exp m = quot(lt.m, lg.m, n);
        Rational c = lt.c / lg.c;
        q = q + MultiPoly::monomial(R, m, c);
        rem = add_scaled(rem, g, -c, &m);
    }
    return q;
}

// ---- weights ----

std::vector<int> weight_vector(const Ring& r, const WeightAssignment& w) {
    std::vector<int> v(r->nvars());
    for (int i = 0; i < r->nvars(); ++i) {
        auto it = w.find(r->name(i));
        if (it == w.end()) throw MuError("no weight for variable " + r->name(i));
        v[i] = it->second;
    }
    return v;
}

int term_weight(const Exp& m, const Ring& r, const WeightAssignment& w) {
    auto v = weight_vector(r, w);
    int s = 0;
    for (int i = 0; i < r->nvars(); ++i) s += v[i] * m[i];
    return s;
}

std::optional<int> weight_of(const MultiPoly& f, const WeightAssignment& w) {
    if (f.is_zero()) throw MuError("weight of the zero polynomial");
    auto v = weight_vector(f.ring(), w);
    const int n = f.ring()->nvars();
    std::optional<int> out;
    for (auto& t : f.terms()) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += v[i] * t.m[i];
        if (out && *out != s) return std::nullopt;
        out = s;
    }
    return out;
}

std::map<int, MultiPoly> weight_components(const MultiPoly& f, const WeightAssignment& w) {
    auto v = weight_vector(f.ring(), w);
    const int n = f.ring()->nvars();
    std::map<int, std::vector<Term>> parts;
    for (auto& t : f.terms()) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += v[i] * t.m[i];
        parts[s].push_back(t);
    }
    std::map<int, MultiPoly> out;
    for (auto& [k, ts] : parts) out.emplace(k, MultiPoly::from_terms(f.ring(), std::move(ts)));
    return out;
}

// ---- substitution ----

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& sub, const Ring& target) {
    const Ring& R = f.ring();
    const int n = R->nvars();
    std::vector<MultiPoly> img(n);
    std::vector<std::vector<MultiPoly>> powers(n);
    for (int i = 0; i < n; ++i) {
        if (!f.uses(i)) continue;
        auto it = sub.find(R->name(i));
        if (it != sub.end()) {
            if (!it->second.ring()->same_vars(*target)) throw MuError("substitution targets differ");
            img[i] = it->second.map_to(target);
        } else {
            auto j = target->index(R->name(i));
            if (!j) throw MuError("unknown variable in substitution: " + R->name(i));
            img[i] = MultiPoly::var(target, *j);
        }
        powers[i].push_back(MultiPoly::constant(target, 1));
    }
    auto pw = [&](int i, int k) -> const MultiPoly& {
        while (int(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * img[i]);
        return powers[i][k];
    };
    std::vector<Term> acc;
    MultiPoly out(target);
    for (auto& t : f.terms()) {
        MultiPoly p = MultiPoly::constant(target, t.c);
        for (int i = 0; i < n; ++i)
            if (t.m[i]) p = p * pw(i, t.m[i]);
        for (auto& u : p.terms()) acc.push_back(u);
    }
    return MultiPoly::from_terms(target, std::move(acc));
}

Rational evaluate(const MultiPoly& f, const std::map<std::string, Rational>& point) {
    const Ring& R = f.ring();
    const int n = R->nvars();
    std::vector<Rational> val(n);
    for (int i = 0; i < n; ++i) {
        if (!f.uses(i)) continue;
        auto it = point.find(R->name(i));
        if (it == point.end()) throw MuError("no value for " + R->name(i));
        val[i] = it->second;
    }
    Rational s = 0;
    for (auto& t : f.terms()) {
        Rational p = t.c;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < t.m[i]; ++k) p *= val[i];
        s += p;
    }
    return s;
}

MultiPoly primitive(const MultiPoly& f) {
    if (f.is_zero()) return f;
    mpz_class l = 1, g = 0;
    for (auto& t : f.terms()) l = lcm(l, mpz_class(t.c.get_den()));
    for (auto& t : f.terms()) g = gcd(g, mpz_class(t.c.get_num() * (l / t.c.get_den())));
    Rational s = Rational(l) / Rational(g);
    if (f.lead().c < 0) s = -s;
    return f * s;
}

}  // namespace mu
