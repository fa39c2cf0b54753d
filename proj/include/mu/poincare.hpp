#pragma once
// Poincaré polynomials from isolated torus-fixed points (Białynicki-Birula cells).

#include <string>
#include <vector>

namespace mu {

struct FixedPointRecord {
    std::string label;
    std::vector<int> weights;
    int dimension() const { return int(weights.size()); }
    int negative_count() const;
};

struct PoincarePolynomial {
    std::vector<long> coeffs;  // coeffs[k] = coefficient of p^k
    long total() const;
    bool palindromic() const;
    std::string str() const;  // 1 + p + 2p^2 + ...
};

// P = sum over fixed points of p^(number of negative weights); throws on a zero weight
PoincarePolynomial assemble(const std::vector<FixedPointRecord>& records);
FixedPointRecord weyl_mirror(const FixedPointRecord& r);
// every mirrored weight multiset occurs in the set (with multiplicity)
bool mirror_closed(const std::vector<FixedPointRecord>& records);
bool smoothness_audit(const std::vector<FixedPointRecord>& records, int expected_dim, std::string* why = nullptr);

}  // namespace mu
