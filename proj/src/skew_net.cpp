#include "mu/skew_net.hpp"

#include <functional>

namespace mu {

const std::array<const char*, 3> kYNames = {"y2", "y0", "y_m2"};

Ring y_ring() {
    static Ring r = make_ring({"y2", "y0", "y_m2"});
    return r;
}

Ring z_ring() {
    static Ring r = make_ring({"z2", "z0", "z_m2"});
    return r;
}

bool SkewNet::skew() const {
    for (auto& a : m)
        if (!(a.transpose() == a * Rational(-1))) return false;
    return true;
}

PolyMatrix SkewNet::symbolic(const Ring& ring) const {
    const int n = m[0].rows();
    PolyMatrix M(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
    for (int s = 0; s < 3; ++s) {
        MultiPoly y = MultiPoly::var(ring, kYNames[s]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[s](i, j) != 0) M[i][j] += y * m[s](i, j);
    }
    return M;
}

SkewNet net_from_forms(const std::vector<RepVector>& forms) {
    if (forms.size() != 3) throw MuError("net_from_forms needs three forms");
    SkewNet net;
    std::array<bool, 3> used{};
    for (auto& fm : forms) {
        const RepSpace& W = *fm.space;
        if (!W.base || W.pairs.empty()) throw MuError("net_from_forms: forms must live in a wedge square");
        auto w = fm.weight();
        if (!w) throw MuError("net_from_forms: form is not a weight vector");
        // y_{-w}: weight 2 -> y_m2 (slot 2), weight -2 -> y2 (slot 0)
        int slot = (*w + 2) / 2;
        if (slot < 0 || slot > 2 || used[slot]) throw MuError("net_from_forms: unexpected weights");
        used[slot] = true;
        const int n = W.base->dim();
        QMatrix A(n, n);
        for (int k = 0; k < W.dim(); ++k) {
            auto [i, j] = W.pairs[k];
            A(i, j) += fm.c[k];
            A(j, i) -= fm.c[k];
        }
        net.m[slot] = A;
    }
    return net;
}

MultiPoly pfaffian(const PolyMatrix& M) {
    const int n = int(M.size());
    if (n == 0) throw MuError("pfaffian of an empty matrix");
    const Ring& R = M[0][0].ring();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M[i][j] != -M[j][i]) throw MuError("pfaffian: matrix is not skew-symmetric");
    if (n % 2) return MultiPoly(R);
    std::function<MultiPoly(const std::vector<int>&)> rec = [&](const std::vector<int>& idx) -> MultiPoly {
        if (idx.empty()) return MultiPoly::constant(R, 1);
        MultiPoly s(R);
        for (size_t j = 1; j < idx.size(); ++j) {
            const MultiPoly& a = M[idx[0]][idx[j]];
            if (a.is_zero()) continue;
            std::vector<int> rest;
            for (size_t k = 1; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            MultiPoly t = a * rec(rest);
            if (j % 2 == 1)
                s += t;
            else
                s -= t;
        }
        return s;
    };
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return rec(idx);
}

MultiPoly determinant(const PolyMatrix& M) {
    const int n = int(M.size());
    if (n == 0) throw MuError("determinant of an empty matrix");
    const Ring& R = M[0][0].ring();
    std::function<MultiPoly(const std::vector<int>&, int)> rec = [&](const std::vector<int>& cols, int row) -> MultiPoly {
        if (cols.empty()) return MultiPoly::constant(R, 1);
        MultiPoly s(R);
        for (size_t k = 0; k < cols.size(); ++k) {
            const MultiPoly& a = M[row][cols[k]];
            if (a.is_zero()) continue;
            std::vector<int> rest = cols;
            rest.erase(rest.begin() + long(k));
            MultiPoly t = a * rec(rest, row + 1);
            if (k % 2 == 0)
                s += t;
            else
                s -= t;
        }
        return s;
    };
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return rec(cols, 0);
}

std::vector<MultiPoly> principal_pfaffians(const SkewNet& net) {
    Ring Y = y_ring();
    PolyMatrix M = net.symbolic(Y);
    const int n = int(M.size());
    std::vector<MultiPoly> out;
    for (int del = 0; del < n; ++del) {
        PolyMatrix S;
        for (int i = 0; i < n; ++i) {
            if (i == del) continue;
            std::vector<MultiPoly> row;
            for (int j = 0; j < n; ++j)
                if (j != del) row.push_back(M[i][j]);
            S.push_back(row);
        }
        out.push_back(pfaffian(S));
    }
    return out;
}

Ideal principal_pfaffian_ideal(const SkewNet& net) { return Ideal(y_ring(), principal_pfaffians(net)); }

MultiPoly apply_differential(const MultiPoly& g, const MultiPoly& F) {
    const Ring& Z = F.ring();
    const Ring& Y = g.ring();
    if (Y->nvars() != Z->nvars()) throw MuError("apply_differential: variable count mismatch");
    MultiPoly out(Z);
    for (auto& t : g.terms()) {
        MultiPoly d = F;
        for (int v = 0; v < Y->nvars() && !d.is_zero(); ++v)
            for (int k = 0; k < t.m[v] && !d.is_zero(); ++k) d = d.diff(v);
        out += d * t.c;
    }
    return out;
}

std::vector<Exp> monomials_of_degree(int n, int d) {
    std::vector<Exp> out;
    Exp cur;
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == n - 1) {
            cur[v] = uint16_t(left);
            out.push_back(cur);
            cur[v] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[v] = uint16_t(e);
            rec(v + 1, left - e);
        }
        cur[v] = 0;
    };
    if (n > 0) rec(0, d);
    return out;
}

// linear map from coefficient vectors of degree-d forms in `to` to (g(d/dz) F) coefficients
static QMatrix differential_system(const std::vector<MultiPoly>& ops, const Ring& target, int d, bool unknown_is_F) {
    (void)unknown_is_F;
    const int n = target->nvars();
    auto mons = monomials_of_degree(n, d);
    std::vector<QVec> rows;
    std::vector<std::vector<MultiPoly>> images;  // images[col][op]
    for (auto& m : mons) {
        MultiPoly F = MultiPoly::monomial(target, m, 1);
        std::vector<MultiPoly> im;
        for (auto& g : ops) im.push_back(apply_differential(g, F));
        images.push_back(im);
    }
    // collect output monomials
    std::vector<std::pair<size_t, Exp>> keys;
    for (auto& col : images)
        for (size_t o = 0; o < col.size(); ++o)
            for (auto& t : col[o].terms()) {
                bool have = false;
                for (auto& k : keys)
                    if (k.first == o && k.second == t.m) have = true;
                if (!have) keys.push_back({o, t.m});
            }
    QMatrix A(int(keys.size()), int(mons.size()));
    for (size_t c = 0; c < mons.size(); ++c)
        for (size_t r = 0; r < keys.size(); ++r) A(int(r), int(c)) = images[c][keys[r].first].coeff(keys[r].second);
    return A;
}

MultiPoly apolar_quartic(const std::vector<MultiPoly>& cubics) {
    Ring Z = z_ring();
    QMatrix A = differential_system(cubics, Z, 4, true);
    auto ns = nullspace(A);
    if (ns.size() != 1) throw MuError("apolar_quartic: solution space has dimension " + std::to_string(ns.size()));
    auto mons = monomials_of_degree(3, 4);
    std::vector<Term> ts;
    for (size_t k = 0; k < mons.size(); ++k)
        if (ns[0][k] != 0) ts.push_back({mons[k], ns[0][k]});
    return primitive(MultiPoly::from_terms(Z, ts));
}

std::vector<MultiPoly> apolar_forms(const MultiPoly& F, int d) {
    Ring Y = y_ring();
    auto mons = monomials_of_degree(3, d);
    // columns: candidate g = y^alpha; rows: coefficients of g(d/dz)F
    std::vector<MultiPoly> images;
    for (auto& m : mons) images.push_back(apply_differential(MultiPoly::monomial(Y, m, 1), F));
    std::vector<Exp> keys;
    for (auto& im : images)
        for (auto& t : im.terms()) {
            bool have = false;
            for (auto& k : keys) have = have || k == t.m;
            if (!have) keys.push_back(t.m);
        }
    QMatrix A(int(keys.size()), int(mons.size()));
    for (size_t c = 0; c < mons.size(); ++c)
        for (size_t r = 0; r < keys.size(); ++r) A(int(r), int(c)) = images[c].coeff(keys[r]);
    std::vector<MultiPoly> out;
    for (auto& v : nullspace(A)) {
        std::vector<Term> ts;
        for (size_t k = 0; k < mons.size(); ++k)
            if (v[k] != 0) ts.push_back({mons[k], v[k]});
        out.push_back(MultiPoly::from_terms(Y, ts));
    }
    return out;
}

std::optional<MultiPoly> square_root_up_to_scalar(const MultiPoly& F) {
    if (F.is_zero()) return std::nullopt;
    const Ring& R = F.ring();
    const int n = R->nvars();
    MultiPoly G = F.monic();
    Exp lm = G.lead().m;
    Exp half;
    for (int i = 0; i < n; ++i) {
        if (lm[i] % 2) return std::nullopt;
        half[i] = uint16_t(lm[i] / 2);
    }
    MultiPoly Q = MultiPoly::monomial(R, half, 1);
    MultiPoly two_lead = MultiPoly::monomial(R, half, 2);
    for (int it = 0; it < 1000; ++it) {
        MultiPoly rem = G - Q * Q;
        if (rem.is_zero()) return Q;
        const Term& lt = rem.lead();
        if (!divides(half, lt.m, n)) return std::nullopt;
        Exp m = quot(lt.m, half, n);
        if (R->cmp(m, half) >= 0) return std::nullopt;
        Q += MultiPoly::monomial(R, m, lt.c / 2);
    }
    return std::nullopt;
}

bool smooth_conic(const MultiPoly& Q) {
    const Ring& R = Q.ring();
    if (R->nvars() != 3 || Q.total_degree() != 2) return false;
    QMatrix S(3, 3);
    for (auto& t : Q.terms()) {
        std::vector<int> vs;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < t.m[i]; ++k) vs.push_back(i);
        if (vs.size() != 2) return false;
        if (vs[0] == vs[1])
            S(vs[0], vs[0]) += t.c;
        else {
            S(vs[0], vs[1]) += t.c / 2;
            S(vs[1], vs[0]) += t.c / 2;
        }
    }
    return rank(S) == 3;
}

}  // namespace mu
