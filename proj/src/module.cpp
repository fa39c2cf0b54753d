#include "mu/module.hpp"

#include <algorithm>

namespace mu {

bool FreeModuleVector::is_zero() const {
    for (auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

std::string FreeModuleVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].str();
    return s + ")";
}

MultiPoly dot(const FreeModuleVector& v, const std::vector<MultiPoly>& g) {
    if (v.entries.size() != g.size()) throw MuError("dot: length mismatch");
    MultiPoly s(g.at(0).ring());
    for (size_t i = 0; i < g.size(); ++i) s += v.entries[i] * g[i];
    return s;
}

static Ring ring_of(const std::vector<FreeModuleVector>& vs) {
    for (auto& v : vs)
        for (auto& e : v.entries)
            if (e.ring()) return e.ring();
    throw MuError("cannot infer ring");
}

std::vector<FreeModuleVector> module_syzygies(const std::vector<FreeModuleVector>& vecs, const Ring& R) {
    if (vecs.empty()) return {};
    const int k = int(vecs[0].rank());
    const int m = int(vecs.size());
    ModuleEngine eng(R, true);
    std::vector<MVec> rows;
    for (int i = 0; i < m; ++i) {
        if (int(vecs[i].rank()) != k) throw MuError("module_syzygies: rank mismatch");
        MVec v = to_mvec(vecs[i].entries, 0);
        v.push_back({k + i, Exp{}, Rational(1)});
        rows.push_back(eng.normalize(std::move(v)));
    }
    auto gb = eng.groebner(std::move(rows));
    std::vector<FreeModuleVector> out;
    for (auto& g : gb)
        if (g[0].comp >= k) out.push_back({from_mvec_entries(g, R, k, k + m)});
    return out;
}

std::vector<FreeModuleVector> syzygies(const std::vector<MultiPoly>& gens, bool minimize) {
    if (gens.empty()) return {};
    Ring R = gens[0].ring();
    std::vector<FreeModuleVector> vs;
    for (auto& g : gens) vs.push_back({{g}});
    auto syz = module_syzygies(vs, R);
    return minimize ? prune_generators(std::move(syz), R) : syz;
}

static int vec_degree(const FreeModuleVector& v) {
    int d = -1;
    for (auto& e : v.entries) d = std::max(d, e.total_degree());
    return d;
}

std::vector<FreeModuleVector> prune_generators(std::vector<FreeModuleVector> gens, const Ring& ring) {
    if (gens.empty()) return gens;
    const int rank = int(gens[0].rank());
    std::stable_sort(gens.begin(), gens.end(),
                     [](const FreeModuleVector& a, const FreeModuleVector& b) { return vec_degree(a) < vec_degree(b); });
    for (size_t k = gens.size(); k-- > 0;) {
        std::vector<FreeModuleVector> others;
        for (size_t l = 0; l < gens.size(); ++l)
            if (l != k) others.push_back(gens[l]);
        if (others.empty()) break;
        if (SubmoduleGB(others, rank, ring).contains(gens[k])) gens.erase(gens.begin() + long(k));
    }
    return gens;
}

std::vector<FreeModuleVector> module_kernel(const std::vector<std::vector<MultiPoly>>& M, const Ideal& modulo) {
    const Ring& R = modulo.ring();
    const int rows = int(M.size());
    if (rows == 0) throw MuError("module_kernel: empty matrix");
    const int cols = int(M[0].size());
    std::vector<FreeModuleVector> vecs;
    for (int j = 0; j < cols; ++j) {
        FreeModuleVector v;
        for (int i = 0; i < rows; ++i) {
            if (int(M[i].size()) != cols) throw MuError("module_kernel: ragged matrix");
            v.entries.push_back(M[i][j].map_to(R));
        }
        vecs.push_back(v);
    }
    for (auto& f : modulo.gens())
        for (int i = 0; i < rows; ++i) {
            FreeModuleVector v;
            for (int r = 0; r < rows; ++r) v.entries.push_back(r == i ? f : MultiPoly(R));
            vecs.push_back(v);
        }
    auto syz = module_syzygies(vecs, R);
    auto gb = modulo.groebner();
    std::vector<FreeModuleVector> out;
    for (auto& s : syz) {
        FreeModuleVector v;
        for (int j = 0; j < cols; ++j) v.entries.push_back(gb.reduce(s.entries[j]));
        if (v.is_zero()) continue;
        bool dup = false;
        for (auto& o : out)
            if (o.entries == v.entries) dup = true;
        if (!dup) out.push_back(v);
    }
    return out;
}

SubmoduleGB::SubmoduleGB(const std::vector<FreeModuleVector>& gens, int rank, const Ring& ring)
    : ring_(ring), rank_(rank) {
    ModuleEngine eng(ring_, true);
    std::vector<MVec> rows;
    for (auto& g : gens) {
        if (int(g.rank()) != rank) throw MuError("SubmoduleGB: rank mismatch");
        std::vector<MultiPoly> e;
        for (auto& x : g.entries) e.push_back(x.map_to(ring_));
        rows.push_back(eng.normalize(to_mvec(e, 0)));
    }
    basis_ = eng.groebner(std::move(rows));
}

FreeModuleVector SubmoduleGB::reduce(const FreeModuleVector& v) const {
    ModuleEngine eng(ring_, true);
    std::vector<MultiPoly> e;
    for (auto& x : v.entries) e.push_back(x.map_to(ring_));
    MVec r = eng.reduce(eng.normalize(to_mvec(e, 0)), basis_);
    return {from_mvec_entries(r, ring_, 0, rank_)};
}

Lifter::Lifter(const std::vector<MultiPoly>& gens) : gens_(gens) {
    if (gens.empty()) throw MuError("Lifter: no generators");
    ring_ = gens[0].ring();
    ModuleEngine eng(ring_, true);
    std::vector<MVec> rows;
    const int m = int(gens.size());
    for (int i = 0; i < m; ++i) {
        MVec v = to_mvec(gens[i], 0);
        v.push_back({1 + i, Exp{}, Rational(1)});
        rows.push_back(eng.normalize(std::move(v)));
    }
    basis_ = eng.groebner(std::move(rows));
}

std::optional<std::vector<MultiPoly>> Lifter::lift(const MultiPoly& f) const {
    ModuleEngine eng(ring_, true);
    MVec r = eng.reduce(to_mvec(f.map_to(ring_), 0), basis_);
    for (auto& t : r)
        if (t.comp == 0) return std::nullopt;
    auto c = from_mvec_entries(r, ring_, 1, 1 + int(gens_.size()));
    for (auto& x : c) x = -x;
    return c;
}

}  // namespace mu
