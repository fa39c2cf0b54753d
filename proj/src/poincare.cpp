#include "mu/poincare.hpp"

#include <algorithm>

#include "mu/poly.hpp"

namespace mu {

int FixedPointRecord::negative_count() const {
    return int(std::count_if(weights.begin(), weights.end(), [](int k) { return k < 0; }));
}

long PoincarePolynomial::total() const {
    long s = 0;
    for (long c : coeffs) s += c;
    return s;
}

bool PoincarePolynomial::palindromic() const {
    return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
}

std::string PoincarePolynomial::str() const {
    std::string out;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs[k] == 1 && k > 0 ? "" : std::to_string(coeffs[k]);
        if (k == 0)
            out += c;
        else if (k == 1)
            out += c + "p";
        else
            out += c + "p^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

PoincarePolynomial assemble(const std::vector<FixedPointRecord>& records) {
    PoincarePolynomial P;
    for (auto& r : records) {
        if (std::count(r.weights.begin(), r.weights.end(), 0))
            throw MuError("assemble: zero weight at " + r.label + " (fixed point not isolated)");
        size_t k = size_t(r.negative_count());
        if (P.coeffs.size() <= k) P.coeffs.resize(k + 1, 0);
        ++P.coeffs[k];
    }
    return P;
}

FixedPointRecord weyl_mirror(const FixedPointRecord& r) {
    FixedPointRecord m{r.label + "'", {}};
    for (int k : r.weights) m.weights.push_back(-k);
    std::sort(m.weights.begin(), m.weights.end(), std::greater<int>());
    return m;
}

bool mirror_closed(const std::vector<FixedPointRecord>& records) {
    auto sorted = [](std::vector<int> w) {
        std::sort(w.begin(), w.end());
        return w;
    };
    std::vector<std::vector<int>> have, want;
    for (auto& r : records) {
        have.push_back(sorted(r.weights));
        want.push_back(sorted(weyl_mirror(r).weights));
    }
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    return have == want;
}

bool smoothness_audit(const std::vector<FixedPointRecord>& records, int expected_dim, std::string* why) {
    for (auto& r : records) {
        if (r.dimension() != expected_dim) {
            if (why) *why = r.label + ": tangent dimension " + std::to_string(r.dimension());
            return false;
        }
        if (std::count(r.weights.begin(), r.weights.end(), 0)) {
            if (why) *why = r.label + ": zero weight";
            return false;
        }
    }
    return true;
}

}  // namespace mu
