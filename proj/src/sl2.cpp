#include "mu/sl2.hpp"

#include <algorithm>

namespace mu {

QMatrix RepSpace::h() const {
    QMatrix m(dim(), dim());
    for (int i = 0; i < dim(); ++i) m(i, i) = weights[i];
    return m;
}

bool RepSpace::bracket_ok() const { return e * f - f * e == h(); }

bool RepSpace::weight_pattern_ok() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            if (e(i, j) != 0 && weights[i] != weights[j] + 2) return false;
            if (f(i, j) != 0 && weights[i] != weights[j] - 2) return false;
        }
    return true;
}

int RepSpace::index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (labels[i] == label) return i;
    throw MuError("no basis vector labelled " + label);
}

RepVector RepVector::basis(RepPtr s, int i) {
    QVec c(s->dim());
    c[i] = 1;
    return {std::move(s), std::move(c)};
}

RepVector RepVector::e() const { return {space, space->e * c}; }
RepVector RepVector::f() const { return {space, space->f * c}; }

std::optional<int> RepVector::weight() const {
    std::optional<int> w;
    for (int i = 0; i < space->dim(); ++i)
        if (c[i] != 0) {
            if (w && *w != space->weights[i]) return std::nullopt;
            w = space->weights[i];
        }
    return w;
}

RepVector RepVector::operator+(const RepVector& o) const {
    RepVector r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

RepVector RepVector::operator*(const Rational& s) const {
    RepVector r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

std::string RepVector::str() const {
    std::string s;
    for (int i = 0; i < space->dim(); ++i) {
        if (c[i] == 0) continue;
        Rational a = c[i];
        bool neg = a < 0;
        if (neg) a = -a;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (a != 1) s += to_string(a) + "*";
        s += space->labels[i];
    }
    return s.empty() ? "0" : s;
}

std::string weight_label(const std::string& prefix, int k) {
    return k >= 0 ? prefix + std::to_string(k) : prefix + "_m" + std::to_string(-k);
}

RepPtr sym_power_std(int d, const std::string& prefix) {
    if (d < 0) throw MuError("sym_power_std: negative degree");
    auto V = std::make_shared<RepSpace>();
    const int n = d + 1;
    V->e = QMatrix(n, n);
    V->f = QMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        V->labels.push_back(weight_label(prefix, d - 2 * i));
        V->weights.push_back(d - 2 * i);
        // e.u_{d-2i} = i u_{d-2i+2},  f.u_{d-2i} = (d-i) u_{d-2i-2}
        if (i > 0) V->e(i - 1, i) = i;
        if (i < d) V->f(i + 1, i) = d - i;
    }
    return V;
}

RepPtr dual(const RepPtr& V, DualConvention conv) {
    auto D = std::make_shared<RepSpace>();
    for (int i = 0; i < V->dim(); ++i) {
        D->labels.push_back(V->labels[i] + "*");
        D->weights.push_back(-V->weights[i]);
    }
    Rational s = conv == DualConvention::Transpose ? 1 : -1;
    D->e = V->e.transpose() * s;
    D->f = V->f.transpose() * s;
    return D;
}

static RepPtr pair_space(const RepPtr& V, bool symmetric) {
    auto S = std::make_shared<RepSpace>();
    const int n = V->dim();
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = symmetric ? i : i + 1; j < n; ++j) {
            idx[i][j] = S->dim();
            S->pairs.push_back({i, j});
            if (symmetric)
                S->labels.push_back(i == j ? V->labels[i] + "^2" : V->labels[i] + "*" + V->labels[j]);
            else
                S->labels.push_back(V->labels[i] + "^" + V->labels[j]);
            S->weights.push_back(V->weights[i] + V->weights[j]);
        }
    const int m = S->dim();
    // product of basis vectors k,l into (index, sign)
    auto slot = [&](int k, int l) -> std::pair<int, int> {
        if (k == l) return symmetric ? std::make_pair(idx[k][k], 1) : std::make_pair(-1, 0);
        if (k < l) return {idx[k][l], 1};
        return {idx[l][k], symmetric ? 1 : -1};
    };
    auto induce = [&](const QMatrix& g) {
        QMatrix out(m, m);
        for (int c = 0; c < m; ++c) {
            auto [i, j] = S->pairs[c];
            for (int k = 0; k < n; ++k) {
                if (g(k, i) != 0) {  // (g b_i) b_j
                    auto [r, sg] = slot(k, j);
                    if (r >= 0) out(r, c) += g(k, i) * sg;
                }
                if (g(k, j) != 0) {  // b_i (g b_j)
                    auto [r, sg] = slot(i, k);
                    if (r >= 0) out(r, c) += g(k, j) * sg;
                }
            }
        }
        return out;
    };
    S->e = induce(V->e);
    S->f = induce(V->f);
    S->base = V;
    return S;
}

RepPtr sym2(const RepPtr& V) { return pair_space(V, true); }
RepPtr wedge2(const RepPtr& V) { return pair_space(V, false); }

RepPtr tensor(const RepPtr& V, const RepPtr& W) {
    auto T = std::make_shared<RepSpace>();
    const int a = V->dim(), b = W->dim();
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            T->labels.push_back(V->labels[i] + "(x)" + W->labels[j]);
            T->weights.push_back(V->weights[i] + W->weights[j]);
            T->pairs.push_back({i, j});
        }
    auto induce = [&](const QMatrix& gv, const QMatrix& gw) {
        QMatrix out(a * b, a * b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) {
                int c = i * b + j;
                for (int k = 0; k < a; ++k)
                    if (gv(k, i) != 0) out(k * b + j, c) += gv(k, i);
                for (int k = 0; k < b; ++k)
                    if (gw(k, j) != 0) out(i * b + k, c) += gw(k, j);
            }
        return out;
    };
    T->e = induce(V->e, W->e);
    T->f = induce(V->f, W->f);
    return T;
}

std::optional<QVec> coordinates(const std::vector<QVec>& basis, const QVec& v) {
    const int m = int(basis.size());
    const int n = int(v.size());
    QMatrix A(n, m + 1);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) A(i, j) = basis[j][i];
    for (int i = 0; i < n; ++i) A(i, m) = v[i];
    auto piv = rref(A);
    if (!piv.empty() && piv.back() == m) return std::nullopt;
    if (int(piv.size()) != m) throw MuError("coordinates: basis is linearly dependent");
    QVec x(m);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = A(int(r), m);
    return x;
}

RepPtr subrep(const RepPtr& V, const std::vector<RepVector>& basis, std::vector<std::string> labels) {
    auto S = std::make_shared<RepSpace>();
    const int m = int(basis.size());
    std::vector<QVec> B;
    for (auto& b : basis) {
        auto w = b.weight();
        if (!w) throw MuError("subrep: basis vector is not a weight vector");
        S->weights.push_back(*w);
        B.push_back(b.c);
    }
    S->labels = std::move(labels);
    S->e = QMatrix(m, m);
    S->f = QMatrix(m, m);
    for (int j = 0; j < m; ++j) {
        auto ce = coordinates(B, V->e * B[j]);
        auto cf = coordinates(B, V->f * B[j]);
        if (!ce || !cf) throw MuError("subrep: span is not invariant");
        for (int i = 0; i < m; ++i) {
            S->e(i, j) = (*ce)[i];
            S->f(i, j) = (*cf)[i];
        }
    }
    return S;
}

std::vector<RepVector> highest_weight_vectors(const RepPtr& V, int wt) {
    std::vector<int> idx;
    for (int i = 0; i < V->dim(); ++i)
        if (V->weights[i] == wt) idx.push_back(i);
    if (idx.empty()) return {};
    QMatrix E(V->dim(), int(idx.size()));
    for (int i = 0; i < V->dim(); ++i)
        for (size_t k = 0; k < idx.size(); ++k) E(i, int(k)) = V->e(i, idx[k]);
    std::vector<RepVector> out;
    for (auto& x : nullspace(E)) {
        QVec c(V->dim());
        for (size_t k = 0; k < idx.size(); ++k) c[idx[k]] = x[k];
        out.push_back({V, c});
    }
    return out;
}

std::vector<RepVector> lowering_orbit(const RepVector& v) {
    if (v.is_zero()) throw MuError("lowering_orbit of the zero vector");
    std::vector<RepVector> out{v};
    for (int k = 0; k <= v.space->dim(); ++k) {
        RepVector n = out.back().f();
        if (n.is_zero()) return out;
        out.push_back(n);
    }
    throw MuError("lowering_orbit: f is not nilpotent");
}

QMatrix multinomial_pairing_sym2(const RepPtr& Sd, const RepPtr& S) {
    QMatrix P(Sd->dim(), S->dim());
    for (int a = 0; a < Sd->dim(); ++a)
        for (int b = 0; b < S->dim(); ++b)
            if (Sd->pairs[a] == S->pairs[b]) P(a, b) = Sd->pairs[a].first == Sd->pairs[a].second ? Rational(1) : Rational(1, 2);
    return P;
}

std::vector<QVec> apolar_annihilator(const std::vector<QVec>& S, const QMatrix& P) {
    if (S.empty()) {
        std::vector<QVec> all;
        for (int i = 0; i < P.cols(); ++i) {
            QVec v(P.cols());
            v[i] = 1;
            all.push_back(v);
        }
        return all;
    }
    QMatrix M = QMatrix::from_rows(S, P.rows()) * P;
    return nullspace(M);
}

bool check_action(const RepSpace& V, const std::vector<ActionFact>& facts, std::string* why) {
    for (auto& fct : facts) {
        const QMatrix& g = fct.op == 'e' ? V.e : V.f;
        for (int i = 0; i < V.dim(); ++i) {
            Rational want = i == fct.dst ? fct.coeff : Rational(0);
            if (g(i, fct.src) != want) {
                if (why)
                    *why = std::string(1, fct.op) + "." + V.labels[fct.src] + " has coefficient " + to_string(g(i, fct.src)) +
                           " on " + V.labels[i] + ", expected " + to_string(want);
                return false;
            }
        }
    }
    return true;
}

MultiPoly sym2_to_poly(const RepVector& v, const Ring& ring, const std::vector<std::string>& vars) {
    MultiPoly p(ring);
    for (int k = 0; k < v.space->dim(); ++k) {
        if (v.c[k] == 0) continue;
        auto [i, j] = v.space->pairs[k];
        p += MultiPoly::var(ring, vars[i]) * MultiPoly::var(ring, vars[j]) * v.c[k];
    }
    return p;
}

RepVector poly_to_sym2(const MultiPoly& p, const RepPtr& S, const std::vector<std::string>& vars) {
    QVec c(S->dim());
    const Ring& R = p.ring();
    std::vector<int> vi;
    for (auto& v : vars) vi.push_back(R->require(v));
    for (auto& t : p.terms()) {
        int found = -1;
        for (int k = 0; k < S->dim(); ++k) {
            auto [i, j] = S->pairs[k];
            Exp m;
            m[vi[i]] += 1;
            m[vi[j]] += 1;
            if (m == t.m) found = k;
        }
        if (found < 0) throw MuError("poly_to_sym2: not a quadric in the given variables");
        c[found] += t.c;
    }
    return {S, c};
}

QVec primitive(const QVec& v) {
    mpz_class l = 1, g = 0;
    for (auto& x : v)
        if (x != 0) l = lcm(l, mpz_class(x.get_den()));
    for (auto& x : v)
        if (x != 0) g = gcd(g, mpz_class(x.get_num() * (l / x.get_den())));
    if (g == 0) return v;
    Rational s = Rational(l) / Rational(g);
    for (auto& x : v)
        if (x != 0) {
            if (x < 0) s = -s;
            break;
        }
    QVec out = v;
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace mu
