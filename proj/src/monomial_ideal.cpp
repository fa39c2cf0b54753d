#include "mu/monomial_ideal.hpp"

#include <algorithm>
#include <functional>

namespace mu {

std::vector<Exp> minimalize(std::vector<Exp> gens, int n) {
    std::sort(gens.begin(), gens.end(), [&](const Exp& a, const Exp& b) {
        int da = total_degree(a, n), db = total_degree(b, n);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.e.begin(), a.e.begin() + n, b.e.begin(), b.e.begin() + n);
    });
    std::vector<Exp> out;
    for (auto& g : gens) {
        bool red = false;
        for (auto& h : out)
            if (divides(h, g, n)) {
                red = true;
                break;
            }
        if (!red) out.push_back(g);
    }
    return out;
}

namespace {

// standard monomials of k[vars]/M as pieces, each multiplied by `prefix`
void decompose(std::vector<Exp> gens, std::vector<int> vars, const Exp& prefix, int n,
               std::vector<StanleyPiece>& out) {
    const Exp one{};
    for (auto& g : gens)
        if (g == one) return;
    if (gens.empty()) {
        out.push_back({prefix, vars});
        return;
    }
    // split on the variable appearing in the most generators
    int best = -1, bestc = -1;
    for (int v : vars) {
        int c = 0;
        for (auto& g : gens) c += g[v] > 0;
        if (c > bestc) {
            bestc = c;
            best = v;
        }
    }
    int d = 0;
    for (auto& g : gens) d = std::max(d, int(g[best]));
    std::vector<int> rest;
    for (int v : vars)
        if (v != best) rest.push_back(v);
    for (int j = 0; j <= d; ++j) {
        std::vector<Exp> mj;
        for (auto& g : gens)
            if (g[best] <= j) {
                Exp h = g;
                h[best] = 0;
                mj.push_back(h);
            }
        Exp p = prefix;
        p[best] = uint16_t(prefix[best] + j);
        std::vector<StanleyPiece> sub;
        decompose(minimalize(mj, n), rest, p, n, sub);
        if (j == d)
            for (auto& s : sub) {
                s.free.push_back(best);
                std::sort(s.free.begin(), s.free.end());
            }
        for (auto& s : sub) out.push_back(std::move(s));
    }
}

}  // namespace

std::vector<StanleyPiece> stanley_decomposition(const std::vector<Exp>& gens, int n) {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    std::vector<StanleyPiece> out;
    decompose(minimalize(gens, n), vars, Exp{}, n, out);
    return out;
}

UniPoly hilbert_polynomial_monomial(const std::vector<Exp>& gens, int n) {
    UniPoly hp;
    for (auto& p : stanley_decomposition(gens, n)) {
        int f = int(p.free.size());
        if (f == 0) continue;
        // #{degree-m monomials in f variables shifted by deg(mono)} = C(m - deg + f - 1, f - 1)
        int dm = total_degree(p.mono, n);
        hp = hp + binomial_poly(Rational(f - 1 - dm), f - 1);
    }
    return hp;
}

static long binom(long a, long b) {
    if (b < 0 || a < b) return 0;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

long hilbert_function_monomial(const std::vector<Exp>& gens, int n, int d) {
    long s = 0;
    for (auto& p : stanley_decomposition(gens, n)) {
        int f = int(p.free.size());
        int e = d - total_degree(p.mono, n);
        if (e < 0) continue;
        if (f == 0)
            s += e == 0;
        else
            s += binom(e + f - 1, f - 1);
    }
    return s;
}

int krull_dimension_monomial(const std::vector<Exp>& gens, int n) {
    int d = -1;
    for (auto& p : stanley_decomposition(gens, n)) d = std::max(d, int(p.free.size()));
    return d;
}

bool finite_weight_spaces(const std::vector<StanleyPiece>& pieces, const std::vector<int>& wts) {
    for (auto& p : pieces) {
        bool pos = false, neg = false;
        for (int v : p.free) {
            if (wts[v] == 0) return false;
            (wts[v] > 0 ? pos : neg) = true;
        }
        if (pos && neg) return false;
    }
    return true;
}

std::vector<Exp> standard_monomials_of_weight(const std::vector<StanleyPiece>& pieces, const std::vector<int>& wts,
                                              int weight, int n) {
    if (!finite_weight_spaces(pieces, wts)) throw MuError("infinite weight space");
    std::vector<Exp> out;
    for (auto& p : pieces) {
        int w0 = 0;
        for (int i = 0; i < n; ++i) w0 += wts[i] * p.mono[i];
        int rem = weight - w0;
        const auto& fr = p.free;
        Exp cur = p.mono;
        std::function<void(size_t, int)> rec = [&](size_t k, int r) {
            if (k == fr.size()) {
                if (r == 0) out.push_back(cur);
                return;
            }
            int w = wts[fr[k]];
            // all free weights share a sign, so r must keep moving toward zero
            for (int e = 0;; ++e) {
                int rr = r - e * w;
                if ((w > 0 && rr < 0) || (w < 0 && rr > 0)) break;
                cur[fr[k]] = uint16_t(p.mono[fr[k]] + e);
                rec(k + 1, rr);
            }
            cur[fr[k]] = p.mono[fr[k]];
        };
        rec(0, rem);
    }
    return out;
}

}  // namespace mu
