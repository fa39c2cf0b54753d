#pragma once
// Exact multivariate polynomials over Q with pluggable monomial orders.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mu {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

// rings in this project have at most a few dozen variables
constexpr int kMaxVars = 40;

struct Exp {
    std::array<uint16_t, kMaxVars> e{};
    bool operator==(const Exp&) const = default;
    uint16_t& operator[](int i) { return e[i]; }
    uint16_t operator[](int i) const { return e[i]; }
};

int total_degree(const Exp& a, int n);
bool divides(const Exp& a, const Exp& b, int n);  // a | b
Exp lcm(const Exp& a, const Exp& b, int n);
Exp mul(const Exp& a, const Exp& b, int n);
Exp quot(const Exp& b, const Exp& a, int n);  // b / a, requires a | b
bool coprime(const Exp& a, const Exp& b, int n);
uint64_t divmask(const Exp& a, int n);

enum class Order { Lex, Grevlex, Block };

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

class PolyRing {
public:
    // Block: grevlex on the first `block` variables, ties broken by grevlex on the rest
    PolyRing(std::vector<std::string> names, Order order = Order::Grevlex, int block = 0);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index(std::string_view name) const;
    int require(std::string_view name) const;
    Order order() const { return order_; }
    int block() const { return block_; }

    // >0 if a > b, 0 if equal, <0 otherwise
    int cmp(const Exp& a, const Exp& b) const;

    Ring with_order(Order o, int block = 0) const;
    bool same_vars(const PolyRing& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    Order order_;
    int block_;
};

Ring make_ring(std::vector<std::string> names, Order order = Order::Grevlex, int block = 0);

struct Term {
    Exp m;
    Rational c;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(Ring r) : ring_(std::move(r)) {}

    static MultiPoly constant(Ring r, const Rational& c);
    static MultiPoly var(Ring r, int i);
    static MultiPoly var(Ring r, std::string_view name);
    static MultiPoly monomial(Ring r, const Exp& m, const Rational& c);
    // sorts and merges; drops zeros
    static MultiPoly from_terms(Ring r, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    size_t size() const { return t_.size(); }
    const Term& lead() const { return t_.front(); }
    int total_degree() const;
    int degree_in(int var) const;
    bool uses(int var) const;
    Rational coeff(const Exp& m) const;
    Rational constant_term() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly mul_term(const Exp& m, const Rational& c) const;
    MultiPoly pow(int k) const;
    MultiPoly monic() const;
    MultiPoly diff(int var) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // re-express in another ring by variable names (orders may differ)
    MultiPoly map_to(const Ring& target) const;

    std::string str() const;

private:
    Ring ring_;
    std::vector<Term> t_;  // strictly decreasing in ring order
    friend MultiPoly add_scaled(const MultiPoly&, const MultiPoly&, const Rational&, const Exp*);
};

// f + c*m*g
MultiPoly add_scaled(const MultiPoly& f, const MultiPoly& g, const Rational& c, const Exp* m = nullptr);

// exact division, throws if g does not divide f
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

using WeightAssignment = std::map<std::string, int>;

// nullopt = inhomogeneous; throws on the zero polynomial or a missing weight
std::optional<int> weight_of(const MultiPoly& f, const WeightAssignment& w);
int term_weight(const Exp& m, const Ring& r, const WeightAssignment& w);
std::vector<int> weight_vector(const Ring& r, const WeightAssignment& w);
// split into weight-homogeneous parts, sorted by weight
std::map<int, MultiPoly> weight_components(const MultiPoly& f, const WeightAssignment& w);

// variables not in `sub` are carried over by name into `target`
MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& sub, const Ring& target);
Rational evaluate(const MultiPoly& f, const std::map<std::string, Rational>& point);

// content normalization: coprime integer coefficients, positive leading coefficient
MultiPoly primitive(const MultiPoly& f);

MultiPoly parse_poly(std::string_view text, const Ring& ring);

struct MuError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mu
