#pragma once
// Buchberger Gröbner bases for ideals and submodules of free modules,
// plus the ideal operations built on elimination.

#include <optional>
#include <string>
#include <vector>

#include "mu/poly.hpp"
#include "mu/unipoly.hpp"

namespace mu {

// ---- module-level engine (rank 1 = ideals) ----

struct MTerm {
    int comp;
    Exp m;
    Rational c;
};
using MVec = std::vector<MTerm>;  // strictly decreasing in the module order

struct GbOptions {
    bool parallel = false;  // batched S-pair reduction with OpenMP
    bool reduce = true;     // return the reduced basis
    std::string* transcript = nullptr;
};

struct GbStats {
    size_t pairs_considered = 0;
    size_t pairs_reduced = 0;
    size_t zero_reductions = 0;
};

class ModuleEngine {
public:
    // pot = position over term (lower component index is larger)
    ModuleEngine(Ring ring, bool pot = true) : ring_(std::move(ring)), n_(ring_->nvars()), pot_(pot) {}

    int cmp(int ca, const Exp& a, int cb, const Exp& b) const;
    MVec normalize(MVec v) const;  // sort + merge
    MVec sub_mul(const MVec& h, size_t start, const Rational& c, const Exp& m, const MVec& g) const;
    MVec add(const MVec& a, const MVec& b, const Rational& c = 1) const;
    MVec monic(MVec v) const;
    MVec spoly(const MVec& f, const MVec& g) const;
    // full reduction against a (not necessarily reduced) basis of monic elements
    MVec reduce(const MVec& h, const std::vector<const MVec*>& basis) const;
    MVec reduce(const MVec& h, const std::vector<MVec>& basis) const;

    std::vector<MVec> groebner(std::vector<MVec> gens, const GbOptions& opt = {}, GbStats* stats = nullptr) const;

    const Ring& ring() const { return ring_; }
    bool pot() const { return pot_; }

private:
    Ring ring_;
    int n_;
    bool pot_;
};

MVec to_mvec(const MultiPoly& f, int comp = 0);
MVec to_mvec(const std::vector<MultiPoly>& entries, int comp_offset = 0);
MultiPoly from_mvec(const MVec& v, const Ring& r, int comp = 0);
std::vector<MultiPoly> from_mvec_entries(const MVec& v, const Ring& r, int lo, int hi);

// ---- ideals ----

struct GroebnerBasis {
    Ring ring;
    std::vector<MultiPoly> basis;  // monic, sorted by increasing leading monomial
    bool reduced = true;

    MultiPoly reduce(const MultiPoly& f) const;
    bool contains(const MultiPoly& f) const { return reduce(f).is_zero(); }
    bool is_unit() const;
    std::vector<Exp> leading_monomials() const;
};

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GbOptions& opt = {}, GbStats* stats = nullptr);
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const Ring& order_ring, const GbOptions& opt = {});
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);
// batch kernel; the serial path is the reference
std::vector<MultiPoly> normal_forms(const std::vector<MultiPoly>& fs, const GroebnerBasis& gb, bool parallel = false);
// property check: every S-polynomial of basis pairs reduces to zero
bool spolys_reduce_to_zero(const GroebnerBasis& gb);
std::string to_string(const GroebnerBasis& gb);

class Ideal {
public:
    Ideal() = default;
    Ideal(Ring r, std::vector<MultiPoly> gens);
    static Ideal parse(const Ring& r, const std::vector<std::string>& gens);

    const Ring& ring() const { return ring_; }
    const std::vector<MultiPoly>& gens() const { return gens_; }
    GroebnerBasis groebner(const GbOptions& opt = {}) const { return buchberger(gens_, ring_, opt); }
    Ideal operator+(const Ideal& o) const;
    Ideal map_to(const Ring& r) const;
    std::string str() const;

private:
    Ring ring_;
    std::vector<MultiPoly> gens_;
};

bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& a);
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const MultiPoly& f);
// Rabinowitsch: (I + <1 - z f>) ∩ R
Ideal saturate(const Ideal& I, const MultiPoly& f);
// quotient-by-f loop until stable (hard cap 50)
Ideal saturate_iterated(const Ideal& I, const MultiPoly& f, int* iterations = nullptr);
Ideal saturate(const Ideal& I, const Ideal& J);
// I as a reduced Gröbner basis (canonical generator list)
Ideal reduced(const Ideal& I);
// homogeneous in the standard grading
bool is_homogeneous(const Ideal& I);
UniPoly hilbert_polynomial(const Ideal& I);
int krull_dimension(const Ideal& I);
// dim_Q R/I for zero-dimensional I, nullopt otherwise
std::optional<long> quotient_dimension(const Ideal& I);

std::string fresh_name(const Ring& r, const std::string& base);

}  // namespace mu
