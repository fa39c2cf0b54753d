#include "mu/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "mu/monomial_ideal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mu {

// ---------------------------------------------------------------- engine

int ModuleEngine::cmp(int ca, const Exp& a, int cb, const Exp& b) const {
    if (pot_) {
        if (ca != cb) return ca < cb ? 1 : -1;
        return ring_->cmp(a, b);
    }
    int c = ring_->cmp(a, b);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
}

MVec ModuleEngine::normalize(MVec v) const {
    std::sort(v.begin(), v.end(), [&](const MTerm& x, const MTerm& y) { return cmp(x.comp, x.m, y.comp, y.m) > 0; });
    MVec out;
    out.reserve(v.size());
    for (auto& t : v) {
        if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m)
            out.back().c += t.c;
        else {
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    return out;
}

// h[start..] - c*m*g
MVec ModuleEngine::sub_mul(const MVec& h, size_t start, const Rational& c, const Exp& m, const MVec& g) const {
    MVec r;
    r.reserve(h.size() - start + g.size());
    size_t i = start, j = 0;
    MTerm gt;
    bool have = false;
    while (i < h.size() || j < g.size()) {
        if (j < g.size() && !have) {
            gt.comp = g[j].comp;
            gt.m = mul(g[j].m, m, n_);
            have = true;
        }
        if (j == g.size()) {
            r.push_back(h[i++]);
            continue;
        }
        if (i == h.size()) {
            r.push_back({gt.comp, gt.m, -c * g[j].c});
            ++j;
            have = false;
            continue;
        }
        int s = cmp(h[i].comp, h[i].m, gt.comp, gt.m);
        if (s > 0)
            r.push_back(h[i++]);
        else if (s < 0) {
            r.push_back({gt.comp, gt.m, -c * g[j].c});
            ++j;
            have = false;
        } else {
            Rational v = h[i].c - c * g[j].c;
            if (v != 0) r.push_back({gt.comp, gt.m, std::move(v)});
            ++i;
            ++j;
            have = false;
        }
    }
    return r;
}

MVec ModuleEngine::add(const MVec& a, const MVec& b, const Rational& c) const {
    Exp one{};
    return sub_mul(a, 0, -c, one, b);
}

MVec ModuleEngine::monic(MVec v) const {
    if (v.empty()) return v;
    Rational inv = 1 / v[0].c;
    for (auto& t : v) t.c *= inv;
    return v;
}

MVec ModuleEngine::spoly(const MVec& f, const MVec& g) const {
    Exp l = lcm(f[0].m, g[0].m, n_);
    Exp mf = quot(l, f[0].m, n_), mg = quot(l, g[0].m, n_);
    MVec a;
    a.reserve(f.size());
    for (auto& t : f) a.push_back({t.comp, mul(t.m, mf, n_), t.c / f[0].c});
    return sub_mul(a, 0, 1 / g[0].c, mg, g);
}

MVec ModuleEngine::reduce(const MVec& h0, const std::vector<const MVec*>& basis) const {
    std::vector<uint64_t> masks(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) masks[k] = divmask((*basis[k])[0].m, n_);
    MVec h = h0, r;
    size_t start = 0;
    while (start < h.size()) {
        const MTerm& lt = h[start];
        uint64_t lm = divmask(lt.m, n_);
        const MVec* best = nullptr;
        for (size_t k = 0; k < basis.size(); ++k) {
            const MVec& g = *basis[k];
            if (g[0].comp != lt.comp || (masks[k] & ~lm)) continue;
            if (!divides(g[0].m, lt.m, n_)) continue;
            if (!best || g.size() < best->size()) best = &g;
        }
        if (!best) {
            r.push_back(lt);
            ++start;
            continue;
        }
        Exp q = quot(lt.m, (*best)[0].m, n_);
        Rational c = lt.c / (*best)[0].c;
        h = sub_mul(h, start, c, q, *best);
        start = 0;
    }
    return r;
}

MVec ModuleEngine::reduce(const MVec& h, const std::vector<MVec>& basis) const {
    std::vector<const MVec*> ptrs;
    for (auto& g : basis)
        if (!g.empty()) ptrs.push_back(&g);
    return reduce(h, ptrs);
}

namespace {

struct Pair {
    int i, j;
    int comp;
    Exp lcm;
    int deg;
};

}  // namespace

std::vector<MVec> ModuleEngine::groebner(std::vector<MVec> gens, const GbOptions& opt, GbStats* stats) const {
    std::vector<MVec> polys;  // every element ever added (monic)
    std::vector<int> active;  // indices forming the current basis
    std::vector<Pair> B;
    const bool ideal_case = [&] {
        for (auto& g : gens)
            for (auto& t : g)
                if (t.comp != 0) return false;
        return true;
    }();
    GbStats st;
    auto log = [&](const std::string& s) {
        if (opt.transcript) *opt.transcript += s + "\n";
    };

    auto lead_exp = [&](int k) -> const Exp& { return polys[k][0].m; };
    auto lead_comp = [&](int k) { return polys[k][0].comp; };

    auto update = [&](int h) {
        std::vector<Pair> C, D;
        for (int g : active)
            if (lead_comp(g) == lead_comp(h)) {
                Exp l = lcm(lead_exp(g), lead_exp(h), n_);
                C.push_back({g, h, lead_comp(h), l, total_degree(l, n_)});
            }
        // Gebauer–Möller: keep a pair only if no other new pair has an lcm dividing its lcm
        for (size_t a = 0; a < C.size(); ++a) {
            const Pair& p = C[a];
            bool cop = ideal_case && coprime(lead_exp(p.i), lead_exp(h), n_);
            bool keep = cop;
            if (!keep) {
                keep = true;
                for (size_t b = a + 1; b < C.size() && keep; ++b)
                    if (divides(C[b].lcm, p.lcm, n_)) keep = false;
                for (size_t b = 0; b < D.size() && keep; ++b)
                    if (divides(D[b].lcm, p.lcm, n_)) keep = false;
            }
            if (keep) D.push_back(p);
        }
        std::vector<Pair> E;
        for (auto& p : D)
            if (!(ideal_case && coprime(lead_exp(p.i), lead_exp(h), n_))) E.push_back(p);
        std::vector<Pair> Bn;
        for (auto& p : B) {
            bool drop = lead_comp(h) == p.comp && divides(lead_exp(h), p.lcm, n_) &&
                        !(lcm(lead_exp(p.i), lead_exp(h), n_) == p.lcm) &&
                        !(lcm(lead_exp(p.j), lead_exp(h), n_) == p.lcm);
            if (!drop) Bn.push_back(p);
        }
        for (auto& p : E) Bn.push_back(p);
        B.swap(Bn);
        std::vector<int> An;
        for (int g : active)
            if (!(lead_comp(g) == lead_comp(h) && divides(lead_exp(h), lead_exp(g), n_))) An.push_back(g);
        An.push_back(h);
        active.swap(An);
    };

    auto current = [&]() {
        std::vector<const MVec*> v;
        for (int g : active) v.push_back(&polys[g]);
        return v;
    };

    // inter-reduce inputs first, in a deterministic order
    for (auto& g : gens) g = normalize(std::move(g));
    std::sort(gens.begin(), gens.end(), [&](const MVec& a, const MVec& b) {
        if (a.empty() || b.empty()) return b.empty() && !a.empty();
        return cmp(a[0].comp, a[0].m, b[0].comp, b[0].m) < 0;
    });
    for (auto& g : gens) {
        if (g.empty()) continue;
        MVec h = reduce(g, current());
        if (h.empty()) continue;
        polys.push_back(monic(std::move(h)));
        update(int(polys.size()) - 1);
    }

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = cmp(a.comp, a.lcm, b.comp, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    while (!B.empty()) {
        std::sort(B.begin(), B.end(), pair_less);
        size_t take = 1;
        if (opt.parallel) {
            while (take < B.size() && B[take].deg == B[0].deg) ++take;
        }
        std::vector<Pair> batch(B.begin(), B.begin() + take);
        B.erase(B.begin(), B.begin() + take);
        st.pairs_considered += batch.size();

        std::vector<MVec> red(batch.size());
        auto snap = current();
        if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long k = 0; k < long(batch.size()); ++k)
                red[k] = reduce(spoly(polys[batch[k].i], polys[batch[k].j]), snap);
        } else {
            for (size_t k = 0; k < batch.size(); ++k) red[k] = reduce(spoly(polys[batch[k].i], polys[batch[k].j]), snap);
        }
        for (size_t k = 0; k < batch.size(); ++k) {
            ++st.pairs_reduced;
            MVec h = take > 1 ? reduce(red[k], current()) : std::move(red[k]);
            if (h.empty()) {
                ++st.zero_reductions;
                continue;
            }
            polys.push_back(monic(std::move(h)));
            update(int(polys.size()) - 1);
            if (opt.transcript) {
                std::ostringstream os;
                os << "pair(" << batch[k].i << "," << batch[k].j << ") deg " << batch[k].deg << " -> new element #"
                   << polys.size() - 1 << " with " << polys.back().size() << " terms";
                log(os.str());
            }
        }
    }

    std::vector<MVec> out;
    for (int g : active) out.push_back(polys[g]);
    std::sort(out.begin(), out.end(), [&](const MVec& a, const MVec& b) { return cmp(a[0].comp, a[0].m, b[0].comp, b[0].m) < 0; });
    if (opt.reduce) {
        // leading terms are already minimal; tail-reduce each against the others
        for (size_t k = 0; k < out.size(); ++k) {
            std::vector<const MVec*> others;
            for (size_t l = 0; l < out.size(); ++l)
                if (l != k) others.push_back(&out[l]);
            MVec tail(out[k].begin() + 1, out[k].end());
            MVec r = reduce(tail, others);
            r.insert(r.begin(), out[k][0]);
            out[k] = monic(std::move(r));
        }
    }
    if (stats) *stats = st;
    log("basis size " + std::to_string(out.size()));
    return out;
}

MVec to_mvec(const MultiPoly& f, int comp) {
    MVec v;
    v.reserve(f.size());
    for (auto& t : f.terms()) v.push_back({comp, t.m, t.c});
    return v;
}

MVec to_mvec(const std::vector<MultiPoly>& entries, int off) {
    MVec v;
    for (size_t i = 0; i < entries.size(); ++i)
        for (auto& t : entries[i].terms()) v.push_back({int(i) + off, t.m, t.c});
    return v;  // caller normalizes
}

MultiPoly from_mvec(const MVec& v, const Ring& r, int comp) {
    std::vector<Term> ts;
    for (auto& t : v)
        if (t.comp == comp) ts.push_back({t.m, t.c});
    return MultiPoly::from_terms(r, std::move(ts));
}

std::vector<MultiPoly> from_mvec_entries(const MVec& v, const Ring& r, int lo, int hi) {
    std::vector<std::vector<Term>> ts(hi - lo);
    for (auto& t : v)
        if (t.comp >= lo && t.comp < hi) ts[t.comp - lo].push_back({t.m, t.c});
    std::vector<MultiPoly> out;
    for (auto& x : ts) out.push_back(MultiPoly::from_terms(r, std::move(x)));
    return out;
}

// ---------------------------------------------------------------- ideals

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GbOptions& opt, GbStats* stats) {
    if (gens.empty()) throw MuError("buchberger needs at least one generator (use the zero polynomial)");
    Ring R = gens[0].ring();
    for (auto& g : gens)
        if (!g.ring()->same_vars(*R) || g.ring()->order() != R->order()) throw MuError("ring mismatch in buchberger");
    ModuleEngine eng(R);
    std::vector<MVec> in;
    for (auto& g : gens)
        if (!g.is_zero()) in.push_back(to_mvec(g));
    auto out = eng.groebner(std::move(in), opt, stats);
    GroebnerBasis gb{R, {}, opt.reduce};
    for (auto& v : out) gb.basis.push_back(from_mvec(v, R));
    return gb;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const Ring& order_ring, const GbOptions& opt) {
    std::vector<MultiPoly> m;
    for (auto& g : gens) m.push_back(g.map_to(order_ring));
    if (m.empty()) m.push_back(MultiPoly(order_ring));
    return buchberger(m, opt);
}

MultiPoly GroebnerBasis::reduce(const MultiPoly& f) const {
    ModuleEngine eng(ring);
    std::vector<MVec> b;
    for (auto& g : basis) b.push_back(to_mvec(g));
    MultiPoly g = f.map_to(ring);
    return from_mvec(eng.reduce(to_mvec(g), b), ring).map_to(f.ring());
}

bool GroebnerBasis::is_unit() const {
    for (auto& g : basis)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

std::vector<Exp> GroebnerBasis::leading_monomials() const {
    std::vector<Exp> v;
    for (auto& g : basis) v.push_back(g.lead().m);
    return v;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) { return gb.reduce(f); }

std::vector<MultiPoly> normal_forms(const std::vector<MultiPoly>& fs, const GroebnerBasis& gb, bool parallel) {
    std::vector<MultiPoly> out(fs.size());
    ModuleEngine eng(gb.ring);
    std::vector<MVec> b;
    for (auto& g : gb.basis) b.push_back(to_mvec(g));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < long(fs.size()); ++k)
            out[k] = from_mvec(eng.reduce(to_mvec(fs[k].map_to(gb.ring)), b), gb.ring).map_to(fs[k].ring());
    } else {
        for (size_t k = 0; k < fs.size(); ++k)
            out[k] = from_mvec(eng.reduce(to_mvec(fs[k].map_to(gb.ring)), b), gb.ring).map_to(fs[k].ring());
    }
    return out;
}

bool spolys_reduce_to_zero(const GroebnerBasis& gb) {
    ModuleEngine eng(gb.ring);
    std::vector<MVec> b;
    for (auto& g : gb.basis)
        if (!g.is_zero()) b.push_back(to_mvec(g));
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j)
            if (!eng.reduce(eng.spoly(b[i], b[j]), b).empty()) return false;
    return true;
}

std::string to_string(const GroebnerBasis& gb) {
    std::string s = "{";
    for (size_t i = 0; i < gb.basis.size(); ++i) s += (i ? ", " : "") + gb.basis[i].str();
    return s + "}";
}

Ideal::Ideal(Ring r, std::vector<MultiPoly> gens) : ring_(std::move(r)) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(g.map_to(ring_));
}

Ideal Ideal::parse(const Ring& r, const std::vector<std::string>& gens) {
    std::vector<MultiPoly> v;
    for (auto& s : gens) v.push_back(parse_poly(s, r));
    return Ideal(r, v);
}

Ideal Ideal::operator+(const Ideal& o) const {
    auto g = gens_;
    for (auto& x : o.gens_) g.push_back(x.map_to(ring_));
    return Ideal(ring_, g);
}

Ideal Ideal::map_to(const Ring& r) const { return Ideal(r, gens_); }

std::string Ideal::str() const {
    std::string s = "<";
    for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    return s + ">";
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
    auto gb = big.groebner();
    for (auto& g : small.gens())
        if (!gb.contains(g)) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

bool is_unit_ideal(const Ideal& a) { return a.groebner().is_unit(); }

std::string fresh_name(const Ring& r, const std::string& base) {
    std::string s = base;
    for (int k = 0; r->index(s); ++k) s = base + std::to_string(k);
    return s;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
    const Ring& R = I.ring();
    std::vector<std::string> names;
    for (auto& d : drop) {
        R->require(d);
        names.push_back(d);
    }
    for (auto& n : R->names())
        if (std::find(drop.begin(), drop.end(), n) == drop.end()) names.push_back(n);
    Ring E = make_ring(names, Order::Block, int(drop.size()));
    auto gb = buchberger(I.gens(), E);
    std::vector<MultiPoly> keep;
    for (auto& g : gb.basis) {
        bool uses = false;
        for (size_t k = 0; k < drop.size(); ++k) uses = uses || g.uses(int(k));
        if (!uses) keep.push_back(g.map_to(R));
    }
    return Ideal(R, keep);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    const Ring& R = I.ring();
    std::string t = fresh_name(R, "_t");
    auto names = R->names();
    names.insert(names.begin(), t);
    Ring E = make_ring(names, R->order() == Order::Lex ? Order::Lex : Order::Grevlex);
    MultiPoly tv = MultiPoly::var(E, 0);
    MultiPoly one = MultiPoly::constant(E, 1);
    std::vector<MultiPoly> gens;
    for (auto& g : I.gens()) gens.push_back(tv * g.map_to(E));
    for (auto& g : J.gens()) gens.push_back((one - tv) * g.map_to(E));
    Ideal K = eliminate(Ideal(E, gens), {t});
    std::vector<MultiPoly> out;
    for (auto& g : K.gens()) out.push_back(g.map_to(R));
    return Ideal(R, out);
}

Ideal quotient(const Ideal& I, const MultiPoly& f) {
    Ideal K = intersect(I, Ideal(I.ring(), {f}));
    std::vector<MultiPoly> out;
    for (auto& g : K.gens()) out.push_back(divide_exact(g, f.map_to(I.ring())));
    return Ideal(I.ring(), out);
}

Ideal saturate(const Ideal& I, const MultiPoly& f) {
    const Ring& R = I.ring();
    std::string z = fresh_name(R, "_z");
    auto names = R->names();
    names.insert(names.begin(), z);
    Ring E = make_ring(names);
    std::vector<MultiPoly> gens;
    for (auto& g : I.gens()) gens.push_back(g.map_to(E));
    gens.push_back(MultiPoly::constant(E, 1) - MultiPoly::var(E, 0) * f.map_to(E));
    Ideal K = eliminate(Ideal(E, gens), {z});
    std::vector<MultiPoly> out;
    for (auto& g : K.gens()) out.push_back(g.map_to(R));
    return Ideal(R, out);
}

Ideal saturate_iterated(const Ideal& I, const MultiPoly& f, int* iterations) {
    Ideal cur = I;
    for (int k = 1; k <= 50; ++k) {
        Ideal nxt = quotient(cur, f);
        if (ideal_contains(cur, nxt)) {
            if (iterations) *iterations = k;
            return reduced(cur);
        }
        cur = nxt;
    }
    throw MuError("saturation did not stabilize within 50 iterations");
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    if (J.gens().empty()) return I;
    Ideal acc = saturate(I, J.gens()[0]);
    for (size_t k = 1; k < J.gens().size(); ++k) acc = intersect(acc, saturate(I, J.gens()[k]));
    return acc;
}

Ideal reduced(const Ideal& I) {
    auto gb = I.groebner();
    return Ideal(I.ring(), gb.basis);
}

bool is_homogeneous(const Ideal& I) {
    for (auto& g : I.gens()) {
        int d = -1;
        for (auto& t : g.terms()) {
            int e = total_degree(t.m, I.ring()->nvars());
            if (d >= 0 && e != d) return false;
            d = e;
        }
    }
    return true;
}

UniPoly hilbert_polynomial(const Ideal& I) {
    if (!is_homogeneous(I)) throw MuError("hilbert_polynomial needs a homogeneous ideal");
    Ring G = I.ring()->with_order(Order::Grevlex);
    auto gb = buchberger(I.gens(), G);
    return hilbert_polynomial_monomial(gb.leading_monomials(), G->nvars());
}

int krull_dimension(const Ideal& I) {
    auto gb = I.groebner();
    if (gb.is_unit()) return -1;
    return krull_dimension_monomial(gb.leading_monomials(), I.ring()->nvars());
}

std::optional<long> quotient_dimension(const Ideal& I) {
    auto gb = I.groebner();
    if (gb.is_unit()) return 0;
    auto pieces = stanley_decomposition(gb.leading_monomials(), I.ring()->nvars());
    for (auto& p : pieces)
        if (!p.free.empty()) return std::nullopt;
    return long(pieces.size());
}

}  // namespace mu
