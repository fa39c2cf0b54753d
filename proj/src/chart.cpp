#include "mu/chart.hpp"

#include <algorithm>

namespace mu {

const std::array<int, 7> kUWeights = {6, 4, 2, 0, -2, -4, -6};

const std::vector<std::string>& chart_labels() {
    static const std::vector<std::string> l = {"p12", "p10", "p-10", "p-12"};
    return l;
}

std::string mirror_label(const std::string& label) {
    if (label == "p12") return "p-12";
    if (label == "p-12") return "p12";
    if (label == "p10") return "p-10";
    if (label == "p-10") return "p10";
    throw MuError("unknown chart " + label);
}

Chart make_chart(const std::string& label) {
    Chart c;
    c.label = label;
    std::string prefix;
    if (label == "p12") {
        c.pinned = {0, 1, 2};
        prefix = "a";
    } else if (label == "p10") {
        // w6 ^ w4 ^ w0
        c.pinned = {0, 1, 3};
        prefix = "b";
    } else if (label == "p-10") {
        c.pinned = {3, 5, 6};
        prefix = "c";
    } else if (label == "p-12") {
        c.pinned = {4, 5, 6};
        prefix = "d";
    } else
        throw MuError("unknown chart '" + label + "' (expected p12, p10, p-10 or p-12)");
    for (int col = 0; col < 7; ++col)
        if (std::find(c.pinned.begin(), c.pinned.end(), col) == c.pinned.end()) c.free_cols.push_back(col);
    for (int r = 0; r < 3; ++r)
        for (int col : c.free_cols) {
            std::string name = prefix + std::to_string(c.coords.size() + 1);
            c.coords.push_back(name);
            c.wts[name] = kUWeights[c.pinned[r]] - kUWeights[col];
        }
    c.ring = make_ring(c.coords);
    return c;
}

PolyMatrix Chart::point() const {
    PolyMatrix P(3, std::vector<MultiPoly>(7, MultiPoly(ring)));
    int k = 0;
    for (int r = 0; r < 3; ++r) {
        P[r][pinned[r]] = MultiPoly::constant(ring, 1);
        for (int col : free_cols) P[r][col] = MultiPoly::var(ring, k++);
    }
    return P;
}

const std::string& Chart::coord_at(int row, int col) const {
    auto it = std::find(free_cols.begin(), free_cols.end(), col);
    if (it == free_cols.end()) throw MuError("column " + std::to_string(col) + " is pinned in " + label);
    return coords[row * 4 + int(it - free_cols.begin())];
}

std::pair<int, int> Chart::position(const std::string& coord) const {
    for (size_t k = 0; k < coords.size(); ++k)
        if (coords[k] == coord) return {int(k) / 4, free_cols[k % 4]};
    throw MuError("no coordinate " + coord + " in " + label);
}

int Chart::plucker_weight() const { return kUWeights[pinned[0]] + kUWeights[pinned[1]] + kUWeights[pinned[2]]; }

PolyMatrix mat_mul(const PolyMatrix& A, const PolyMatrix& B) {
    const size_t n = A.size(), m = B.size(), p = B.empty() ? 0 : B[0].size();
    const Ring& R = A[0][0].ring();
    PolyMatrix C(n, std::vector<MultiPoly>(p, MultiPoly(R)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < m; ++k) {
            if (A[i][k].is_zero()) continue;
            for (size_t j = 0; j < p; ++j)
                if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

PolyMatrix mat_transpose(const PolyMatrix& A) {
    PolyMatrix T(A[0].size(), std::vector<MultiPoly>(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
    return T;
}

PolyMatrix constant_matrix(const QMatrix& A, const Ring& r) {
    PolyMatrix M(A.rows(), std::vector<MultiPoly>(A.cols(), MultiPoly(r)));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (A(i, j) != 0) M[i][j] = MultiPoly::constant(r, A(i, j));
    return M;
}

PolyMatrix columns(const PolyMatrix& A, const std::vector<int>& cols) {
    PolyMatrix B(A.size());
    for (size_t i = 0; i < A.size(); ++i)
        for (int c : cols) B[i].push_back(A[i][c]);
    return B;
}

PolyMatrix adjugate3(const PolyMatrix& B) {
    PolyMatrix A(3, std::vector<MultiPoly>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of (j, i)
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            A[i][j] = B[r0][c0] * B[r1][c1] - B[r0][c1] * B[r1][c0];
        }
    return A;
}

PolyMatrix substitute(const PolyMatrix& A, const std::map<std::string, MultiPoly>& sub, const Ring& target) {
    PolyMatrix B(A.size());
    for (size_t i = 0; i < A.size(); ++i)
        for (auto& e : A[i]) B[i].push_back(substitute(e, sub, target));
    return B;
}

std::vector<MultiPoly> chart_equations(const Chart& c, const SkewNet& net) {
    PolyMatrix P = c.point();
    PolyMatrix Pt = mat_transpose(P);
    std::vector<MultiPoly> out;
    for (int k = 0; k < 3; ++k) {
        PolyMatrix M = mat_mul(mat_mul(P, constant_matrix(net.m[k], c.ring)), Pt);
        out.push_back(M[0][1]);
        out.push_back(M[0][2]);
        out.push_back(M[1][2]);
    }
    return out;
}

MultiPoly ChartParam::to_free(const MultiPoly& f) const { return substitute(f, sub, free_ring); }

PolyMatrix ChartParam::point() const { return substitute(chart.point(), sub, free_ring); }

// f = c*x + g with x absent from g and c constant
static bool solvable_for(const MultiPoly& f, int v, Rational* c) {
    int hits = 0;
    for (auto& t : f.terms()) {
        if (t.m[v] == 0) continue;
        if (t.m[v] != 1 || total_degree(t.m, f.ring()->nvars()) != 1) return false;
        *c = t.c;
        ++hits;
    }
    return hits == 1;
}

// with a prescribed free set: a reduced Gröbner basis in an order eliminating the other coordinates
static ChartParam parameterize_over(const Chart& c, const std::vector<MultiPoly>& eqs, const std::set<std::string>& free) {
    std::vector<std::string> names;
    for (auto& x : c.coords)
        if (!free.count(x)) names.push_back(x);
    const int nd = int(names.size());
    for (auto& x : c.coords)
        if (free.count(x)) names.push_back(x);
    if (int(free.size()) + nd != int(c.coords.size())) throw MuError("parameterize: free set is not a set of chart coordinates");
    Ring B = make_ring(names, Order::Block, nd);
    std::vector<MultiPoly> in;
    for (auto& e : eqs) in.push_back(e.map_to(B));
    GroebnerBasis gb = buchberger(in, B);
    ChartParam P;
    P.chart = c;
    for (auto& x : c.coords)
        if (free.count(x)) P.free.push_back(x);
    P.free_ring = make_ring(P.free);
    for (auto& g : gb.basis) {
        const Exp& lm = g.lead().m;
        int lead_var = -1;
        for (int v = 0; v < nd; ++v)
            if (lm[v]) lead_var = v;
        bool tail_free = true;
        for (size_t k = 1; k < g.terms().size(); ++k)
            for (int v = 0; v < nd; ++v) tail_free = tail_free && g.terms()[k].m[v] == 0;
        if (lead_var < 0) {
            MultiPoly r = primitive(g.map_to(P.free_ring));
            P.residual.push_back(r);
            continue;
        }
        if (total_degree(lm, B->nvars()) != 1 || !tail_free)
            throw MuError("chart " + c.label + " is not triangular over the chosen free coordinates (" + g.str() + ")");
        MultiPoly x = MultiPoly::var(B, lead_var);
        P.sub[names[lead_var]] = (x - g).map_to(P.free_ring);
        P.solve_order.push_back(names[lead_var]);
    }
    if (int(P.sub.size()) != nd) throw MuError("chart " + c.label + ": some coordinates are not determined by the free ones");
    for (auto& f : P.free) P.wts[f] = c.wts.at(f);
    return P;
}

ChartParam chart_parameterize(const Chart& c, const std::vector<MultiPoly>& eqs, const std::set<std::string>& keep_free) {
    if (!keep_free.empty()) return parameterize_over(c, eqs, keep_free);
    const Ring& R = c.ring;
    const int n = R->nvars();
    std::vector<MultiPoly> E;
    for (auto& e : eqs)
        if (!e.is_zero()) E.push_back(e.map_to(R));
    std::map<std::string, MultiPoly> sol;  // in the full ring
    std::vector<std::string> order;
    std::vector<bool> solved(n, false);
    while (true) {
        bool progress = false;
        for (int v = 0; v < n && !progress; ++v) {
            if (solved[v] || keep_free.count(R->name(v))) continue;
            for (size_t k = 0; k < E.size(); ++k) {
                Rational cf;
                if (!solvable_for(E[k], v, &cf)) continue;
                MultiPoly x = MultiPoly::var(R, v);
                MultiPoly val = (x * cf - E[k]) * (Rational(1) / cf);
                std::map<std::string, MultiPoly> one{{R->name(v), val}};
                for (auto& [name, p] : sol) p = substitute(p, one, R);
                sol[R->name(v)] = val;
                order.push_back(R->name(v));
                solved[v] = true;
                std::vector<MultiPoly> rest;
                for (size_t j = 0; j < E.size(); ++j) {
                    if (j == k) continue;
                    MultiPoly s = substitute(E[j], one, R);
                    if (!s.is_zero()) rest.push_back(s);
                }
                E = std::move(rest);
                progress = true;
                break;
            }
        }
        if (!progress) break;
    }
    ChartParam P;
    P.chart = c;
    for (int v = 0; v < n; ++v)
        if (!solved[v]) P.free.push_back(R->name(v));
    P.free_ring = make_ring(P.free);
    for (auto& [name, p] : sol) P.sub[name] = p.map_to(P.free_ring);
    P.solve_order = order;
    for (auto& e : E) {
        MultiPoly r = primitive(e.map_to(P.free_ring));
        bool dup = false;
        for (auto& o : P.residual) dup = dup || o == r;
        if (!dup) P.residual.push_back(r);
    }
    for (auto& f : P.free) P.wts[f] = c.wts.at(f);
    return P;
}

MultiPoly mirror_poly(const MultiPoly& f, const Chart& from, const Chart& to) {
    std::map<std::string, MultiPoly> sub;
    for (auto& name : from.coords) {
        auto [r, col] = from.position(name);
        sub[name] = MultiPoly::var(to.ring, to.coord_at(2 - r, 6 - col));
    }
    return substitute(f.map_to(from.ring), sub, to.ring);
}

Transition make_transition(const ChartParam& from, const Chart& to) {
    Transition tr;
    tr.from = from.chart.label;
    tr.to = to.label;
    PolyMatrix P = from.point();
    std::vector<int> pc(to.pinned.begin(), to.pinned.end());
    PolyMatrix B = columns(P, pc);
    PolyMatrix A = adjugate3(B);
    tr.d = determinant(B);
    PolyMatrix N = mat_mul(A, P);
    for (auto& name : to.coords) {
        auto [r, col] = to.position(name);
        tr.num[name] = N[r][col];
    }
    return tr;
}

std::pair<MultiPoly, int> transport(const MultiPoly& f, const Transition& tr, const Ring& target) {
    const Ring& R = f.ring();
    const int n = R->nvars();
    const int D = f.is_zero() ? 0 : f.total_degree();
    std::vector<MultiPoly> img(n);
    for (int i = 0; i < n; ++i) {
        if (!f.uses(i)) continue;
        auto it = tr.num.find(R->name(i));
        if (it == tr.num.end()) throw MuError("transport: " + R->name(i) + " is not a coordinate of " + tr.to);
        img[i] = it->second.map_to(target);
    }
    MultiPoly d = tr.d.map_to(target);
    std::vector<MultiPoly> dpow{MultiPoly::constant(target, 1)};
    while (int(dpow.size()) <= D) dpow.push_back(dpow.back() * d);
    MultiPoly out(target);
    for (auto& t : f.terms()) {
        MultiPoly p = MultiPoly::constant(target, t.c);
        int deg = 0;
        for (int i = 0; i < n; ++i) {
            deg += t.m[i];
            for (int k = 0; k < t.m[i]; ++k) p = p * img[i];
        }
        out += p * dpow[D - deg];
    }
    return {out, D};
}

}  // namespace mu
