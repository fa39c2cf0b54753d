#pragma once
// Submodules of free modules: syzygies, kernels modulo an ideal, lifting.

#include <optional>
#include <vector>

#include "mu/groebner.hpp"

namespace mu {

struct FreeModuleVector {
    std::vector<MultiPoly> entries;

    size_t rank() const { return entries.size(); }
    bool is_zero() const;
    std::string str() const;
};

MultiPoly dot(const FreeModuleVector& v, const std::vector<MultiPoly>& g);

// generators of Syz(g_1..g_m) from a POT module basis of the rows [g_i | e_i]
std::vector<FreeModuleVector> syzygies(const std::vector<MultiPoly>& gens, bool minimize = true);
// drop generators lying in the submodule spanned by the others (greedy, highest degree first)
std::vector<FreeModuleVector> prune_generators(std::vector<FreeModuleVector> gens, const Ring& ring);
// syzygies among vectors of R^rank
std::vector<FreeModuleVector> module_syzygies(const std::vector<FreeModuleVector>& vecs, const Ring& ring);
// {v in R^cols : M v in modulo * R^rows}, M given by rows
std::vector<FreeModuleVector> module_kernel(const std::vector<std::vector<MultiPoly>>& M, const Ideal& modulo);

// submodule of R^rank with a Gröbner basis (membership, normal forms)
class SubmoduleGB {
public:
    SubmoduleGB(const std::vector<FreeModuleVector>& gens, int rank, const Ring& ring);
    FreeModuleVector reduce(const FreeModuleVector& v) const;
    bool contains(const FreeModuleVector& v) const { return reduce(v).is_zero(); }
    size_t size() const { return basis_.size(); }

private:
    Ring ring_;
    int rank_;
    std::vector<MVec> basis_;
};

// cofactors c with f = sum c_i g_i (nullopt if f is not in the ideal)
class Lifter {
public:
    explicit Lifter(const std::vector<MultiPoly>& gens);
    std::optional<std::vector<MultiPoly>> lift(const MultiPoly& f) const;
    const std::vector<MultiPoly>& gens() const { return gens_; }

private:
    Ring ring_;
    std::vector<MultiPoly> gens_;
    std::vector<MVec> basis_;
};

}  // namespace mu
