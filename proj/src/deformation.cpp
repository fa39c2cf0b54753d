#include "mu/deformation.hpp"

#include <algorithm>

#include "mu/monomial_ideal.hpp"

namespace mu {

std::vector<FreeModuleVector> syzygies_modulo(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& residual) {
    std::vector<MultiPoly> all = gens;
    for (auto& r : residual) all.push_back(r);
    std::vector<FreeModuleVector> out;
    for (auto& s : syzygies(all, false)) {
        FreeModuleVector v;
        v.entries.assign(s.entries.begin(), s.entries.begin() + long(gens.size()));
        if (!v.is_zero()) out.push_back(v);
    }
    return out;
}

std::vector<HomElement> hom_module(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& residual,
                                   const std::string& chart) {
    if (gens.empty()) return {};
    std::vector<MultiPoly> all = gens;
    for (auto& r : residual) all.push_back(r);
    Ideal I(gens[0].ring(), all);
    std::vector<std::vector<MultiPoly>> M;
    for (auto& s : syzygies_modulo(gens, residual)) M.push_back(s.entries);
    std::vector<HomElement> out;
    if (M.empty()) {
        // free: every column is allowed
        for (size_t i = 0; i < gens.size(); ++i) {
            HomElement h{chart, std::vector<MultiPoly>(gens.size(), MultiPoly(gens[0].ring()))};
            h.column[i] = MultiPoly::constant(gens[0].ring(), 1);
            out.push_back(h);
        }
        return out;
    }
    for (auto& v : module_kernel(M, I)) out.push_back({chart, v.entries});
    return out;
}

bool verify_hom(const HomElement& h, const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& residual) {
    if (h.column.size() != gens.size()) return false;
    std::vector<MultiPoly> all = gens;
    for (auto& r : residual) all.push_back(r);
    GroebnerBasis gb = buchberger(all);
    for (auto& s : syzygies_modulo(gens, residual)) {
        MultiPoly acc(gens[0].ring());
        for (size_t i = 0; i < gens.size(); ++i) acc += s.entries[i] * h.column[i].map_to(gens[0].ring());
        if (!gb.contains(acc)) return false;
    }
    return true;
}

std::optional<int> hom_weight(const HomElement& h, const std::vector<MultiPoly>& gens, const WeightAssignment& wts) {
    std::optional<int> k;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (h.column[i].is_zero()) continue;
        auto wg = weight_of(gens[i], wts);
        auto wv = weight_of(h.column[i], wts);
        if (!wg || !wv) return std::nullopt;
        int here = *wg - *wv;
        if (k && *k != here) return std::nullopt;
        k = here;
    }
    return k;
}

std::map<int, HomElement> hom_components(const HomElement& h, const std::vector<MultiPoly>& gens, const WeightAssignment& wts) {
    std::map<int, HomElement> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (h.column[i].is_zero()) continue;
        auto wg = weight_of(gens[i], wts);
        if (!wg) throw MuError("hom_components: generator is not weight-homogeneous");
        for (auto& [wv, part] : weight_components(h.column[i], wts)) {
            int k = *wg - wv;
            auto it = out.find(k);
            if (it == out.end())
                it = out.emplace(k, HomElement{h.chart, std::vector<MultiPoly>(gens.size(), MultiPoly(gens[0].ring()))}).first;
            it->second.column[i] = part;
        }
    }
    return out;
}

bool TangentReport::has_zero_weight() const { return std::find(weights.begin(), weights.end(), 0) != weights.end(); }

int TangentReport::negative_count() const {
    return int(std::count_if(weights.begin(), weights.end(), [](int k) { return k < 0; }));
}

namespace {

struct Local {
    const ChartParam* cp;
    std::vector<MultiPoly> gens;  // minimal modulo the residual
    std::vector<int> gen_wts;
    GroebnerBasis gb;             // of gens + residual
    std::vector<StanleyPiece> pieces;
    std::vector<int> var_wts;
    std::vector<std::pair<int, FreeModuleVector>> syz;  // homogeneous syzygies mod residual, with weight
};

struct Overlap {
    int p, q;              // constraints live in chart p
    MultiPoly d;           // transition denominator, in p's free ring
    GroebnerBasis sat;     // (I_p : d^inf)
    std::vector<MultiPoly> num;       // transported q-generators
    std::vector<int> e, N;            // exponents
    std::vector<std::vector<MultiPoly>> cof;  // cofactors of d^N num in terms of p's generators
    Transition tr;                    // p -> q coordinates
};

int weight_or_throw(const MultiPoly& f, const WeightAssignment& w) {
    auto k = weight_of(f, w);
    if (!k) throw MuError("not weight-homogeneous: " + f.str());
    return *k;
}

// unknown = (chart slot, generator, monomial)
struct Unknown {
    int slot, gen;
    Exp m;
};

// coefficient rows of linear combinations of polynomials, collected by monomial
struct RowCollector {
    std::vector<std::pair<Exp, std::map<int, Rational>>> rows;  // monomial -> (unknown -> coeff)
    void add(const MultiPoly& f, int unknown) {
        for (auto& t : f.terms()) {
            auto it = std::find_if(rows.begin(), rows.end(), [&](auto& r) { return r.first == t.m; });
            if (it == rows.end()) {
                rows.push_back({t.m, {}});
                it = rows.end() - 1;
            }
            it->second[unknown] += t.c;
        }
    }
};

}  // namespace

TangentReport glue_tangent(const FixedCurve& c, const ChartSet& charts, const std::vector<MultiPoly>& w, int kmin, int kmax) {
    TangentReport rep;
    rep.label = c.label;
    rep.kmin = kmin;
    rep.kmax = kmax;
    std::vector<Local> loc;
    for (auto& l : chart_labels()) {
        const ChartParam& cp = charts.at(l);
        Ideal I = curve_ideal(c, cp, charts, w);
        if (is_unit_ideal(I)) continue;
        Local L;
        L.cp = &cp;
        GroebnerBasis rgb = buchberger(cp.residual.empty() ? std::vector<MultiPoly>{MultiPoly(cp.free_ring)} : cp.residual,
                                       cp.free_ring);
        std::vector<MultiPoly> cand;
        for (auto& g : I.gens())
            if (!rgb.contains(g)) cand.push_back(g);
        // drop generators already generated by the others and the residual
        std::sort(cand.begin(), cand.end(), [](auto& a, auto& b) { return a.total_degree() > b.total_degree(); });
        for (size_t i = 0; i < cand.size();) {
            std::vector<MultiPoly> others = cp.residual;
            for (size_t j = 0; j < cand.size(); ++j)
                if (j != i) others.push_back(cand[j]);
            if (!others.empty() && buchberger(others, cp.free_ring).contains(cand[i]))
                cand.erase(cand.begin() + long(i));
            else
                ++i;
        }
        std::reverse(cand.begin(), cand.end());
        L.gens = cand;
        for (auto& g : L.gens) L.gen_wts.push_back(weight_or_throw(g, cp.wts));
        std::vector<MultiPoly> all = L.gens;
        for (auto& r : cp.residual) all.push_back(r);
        L.gb = buchberger(all, cp.free_ring);
        L.pieces = stanley_decomposition(L.gb.leading_monomials(), cp.free_ring->nvars());
        L.var_wts = weight_vector(cp.free_ring, cp.wts);
        if (!finite_weight_spaces(L.pieces, L.var_wts))
            throw MuError(c.label + " on " + l + ": weight spaces of the coordinate ring are infinite");
        std::vector<int> res_wts;
        for (auto& r : cp.residual) res_wts.push_back(weight_or_throw(r, cp.wts));
        for (auto& s : syzygies_modulo(L.gens, cp.residual)) {
            std::map<int, FreeModuleVector> parts;
            for (size_t i = 0; i < L.gens.size(); ++i)
                for (auto& [wv, part] : weight_components(s.entries[i], cp.wts)) {
                    int tot = wv + L.gen_wts[i];
                    auto it = parts.find(tot);
                    if (it == parts.end())
                        it = parts.emplace(tot, FreeModuleVector{std::vector<MultiPoly>(L.gens.size(), MultiPoly(cp.free_ring))}).first;
                    it->second.entries[i] += part;
                }
            for (auto& [tot, v] : parts) L.syz.push_back({tot, v});
        }
        ChartTangent ct;
        ct.chart = l;
        for (auto& g : L.gens) ct.gens.push_back(g.str());
        rep.charts.push_back(ct);
        loc.push_back(std::move(L));
    }
    if (loc.empty()) throw MuError(c.label + " meets no chart");

    // overlaps: constraints in the lower slot for each unordered pair
    std::vector<Overlap> ovs;
    for (int p = 0; p < int(loc.size()); ++p)
        for (int q = p + 1; q < int(loc.size()); ++q) {
            const ChartParam& P = *loc[p].cp;
            const ChartParam& Q = *loc[q].cp;
            Overlap ov;
            ov.p = p;
            ov.q = q;
            ov.tr = make_transition(P, Q.chart);
            ov.d = ov.tr.d;
            std::vector<MultiPoly> ig = loc[p].gb.basis;
            ov.sat = Ideal(P.free_ring, ig).groebner();
            ov.sat = saturate(Ideal(P.free_ring, ig), ov.d).groebner();
            if (ov.sat.is_unit()) continue;
            std::vector<MultiPoly> lift_gens = loc[p].gens;
            for (auto& r : P.residual) lift_gens.push_back(r);
            Lifter lifter(lift_gens);
            for (auto& g : loc[q].gens) {
                auto [n, e] = transport(g.map_to(Q.chart.ring), ov.tr, P.free_ring);
                MultiPoly x = n;
                int N = 0;
                while (!loc[p].gb.contains(x)) {
                    if (++N > 40) throw MuError(c.label + ": transported generator never enters the ideal on " + P.chart.label);
                    x = x * ov.d;
                }
                auto cf = lifter.lift(x);
                if (!cf) throw MuError("lift failed on " + P.chart.label);
                cf->resize(loc[p].gens.size());
                ov.num.push_back(n);
                ov.e.push_back(e);
                ov.N.push_back(N);
                ov.cof.push_back(*cf);
            }
            rep.overlaps.push_back(P.chart.label + "|" + Q.chart.label);
            ovs.push_back(std::move(ov));
        }

    for (int k = kmin; k <= kmax; ++k) {
        std::vector<Unknown> unk;
        std::vector<std::vector<std::vector<int>>> index(loc.size());  // slot -> gen -> unknown ids
        for (int s = 0; s < int(loc.size()); ++s) {
            const Local& L = loc[s];
            index[s].resize(L.gens.size());
            for (size_t i = 0; i < L.gens.size(); ++i)
                for (auto& m : standard_monomials_of_weight(L.pieces, L.var_wts, L.gen_wts[i] - k, L.cp->free_ring->nvars())) {
                    index[s][i].push_back(int(unk.size()));
                    unk.push_back({s, int(i), m});
                }
        }
        if (unk.empty()) continue;
        std::vector<QVec> rows;
        auto flush = [&](RowCollector& rc) {
            for (auto& [m, coeffs] : rc.rows) {
                QVec r(unk.size());
                bool nz = false;
                for (auto& [u, c] : coeffs)
                    if (c != 0) {
                        r[u] = c;
                        nz = true;
                    }
                if (nz) rows.push_back(r);
            }
        };
        // local conditions
        std::vector<size_t> local_rows_end(loc.size());
        for (int s = 0; s < int(loc.size()); ++s) {
            const Local& L = loc[s];
            const Ring& F = L.cp->free_ring;
            for (auto& [tot, syz] : L.syz) {
                RowCollector rc;
                for (size_t i = 0; i < L.gens.size(); ++i) {
                    if (syz.entries[i].is_zero()) continue;
                    for (int u : index[s][i]) rc.add(L.gb.reduce(syz.entries[i] * MultiPoly::monomial(F, unk[u].m, 1)), u);
                }
                flush(rc);
            }
            local_rows_end[s] = rows.size();
        }
        // local dimensions per chart
        for (int s = 0; s < int(loc.size()); ++s) {
            std::vector<int> ids;
            for (auto& g : index[s])
                for (int u : g) ids.push_back(u);
            if (ids.empty()) continue;
            size_t lo = s == 0 ? 0 : local_rows_end[s - 1];
            QMatrix A(int(local_rows_end[s] - lo), int(ids.size()));
            for (size_t r = lo; r < local_rows_end[s]; ++r)
                for (size_t j = 0; j < ids.size(); ++j) A(int(r - lo), int(j)) = rows[r][ids[j]];
            int dim = int(ids.size()) - (A.rows() ? rank(A) : 0);
            if (dim) rep.charts[s].local_dims[k] = dim;
        }
        // gluing conditions
        for (auto& ov : ovs) {
            const Local& Lp = loc[ov.p];
            const Local& Lq = loc[ov.q];
            const Ring& F = Lp.cp->free_ring;
            for (size_t j = 0; j < Lq.gens.size(); ++j) {
                int Dmax = 0;
                for (int u : index[ov.q][j]) Dmax = std::max(Dmax, total_degree(unk[u].m, Lq.cp->free_ring->nvars()));
                bool any = !index[ov.q][j].empty();
                for (size_t i = 0; i < Lp.gens.size(); ++i) any = any || (!ov.cof[j][i].is_zero() && !index[ov.p][i].empty());
                if (!any) continue;
                RowCollector rc;
                MultiPoly dD = ov.d.pow(Dmax);
                for (size_t i = 0; i < Lp.gens.size(); ++i) {
                    if (ov.cof[j][i].is_zero()) continue;
                    for (int u : index[ov.p][i]) rc.add(ov.sat.reduce(ov.cof[j][i] * MultiPoly::monomial(F, unk[u].m, 1) * dD), u);
                }
                for (int u : index[ov.q][j]) {
                    MultiPoly mono = MultiPoly::monomial(Lq.cp->free_ring, unk[u].m, 1);
                    auto [n2, deg] = transport(mono.map_to(Lq.cp->chart.ring), ov.tr, F);
                    MultiPoly term = n2 * ov.d.pow(ov.N[j] + ov.e[j] + Dmax - deg) * Rational(-1);
                    rc.add(ov.sat.reduce(term), u);
                }
                flush(rc);
            }
        }
        QMatrix A(int(rows.size()), int(unk.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t j = 0; j < unk.size(); ++j) A(int(r), int(j)) = rows[r][j];
        int dim = int(unk.size()) - (rows.empty() ? 0 : rank(A));
        for (int t = 0; t < dim; ++t) rep.weights.push_back(k);
        if (dim && std::abs(k) >= 13) rep.band_empty = false;
    }
    std::sort(rep.weights.begin(), rep.weights.end(), std::greater<int>());
    rep.dimension = int(rep.weights.size());
    return rep;
}

}  // namespace mu
