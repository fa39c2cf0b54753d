#pragma once
// Hom(I_C, O_C) on chart coordinate rings, torus weights of homomorphisms,
// and the global tangent space of the Hilbert scheme glued over the four charts.

#include <optional>
#include <string>
#include <vector>

#include "mu/curves.hpp"
#include "mu/module.hpp"

namespace mu {

struct HomElement {
    std::string chart;
    std::vector<MultiPoly> column;  // image of each ordered generator
};

// syzygies of gens modulo the relations `residual` (first gens.size() entries of Syz(gens, residual))
std::vector<FreeModuleVector> syzygies_modulo(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& residual);
// generators of Hom(I, R/I) where I = <gens> + <residual> over R = Q[x]/<residual>
std::vector<HomElement> hom_module(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& residual,
                                   const std::string& chart = "");
bool verify_hom(const HomElement& h, const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& residual);
// wt(generator) - wt(image), constant over the nonzero entries; nullopt if inconsistent or zero
std::optional<int> hom_weight(const HomElement& h, const std::vector<MultiPoly>& gens, const WeightAssignment& wts);
// split a column into weight-homogeneous columns, keyed by hom weight
std::map<int, HomElement> hom_components(const HomElement& h, const std::vector<MultiPoly>& gens,
                                         const WeightAssignment& wts);

struct ChartTangent {
    std::string chart;
    std::vector<std::string> gens;  // generators used on this chart
    std::map<int, int> local_dims;  // weight -> dim of Hom_k on the chart
};

struct TangentReport {
    std::string label;
    int dimension = 0;
    std::vector<int> weights;  // sorted decreasing
    std::vector<ChartTangent> charts;
    std::vector<std::string> overlaps;  // chart pairs glued
    int kmin = -16, kmax = 16;
    bool band_empty = true;  // nothing with 13 <= |k| <= 16
    bool has_zero_weight() const;
    int negative_count() const;
};

// global sections of Hom(I_C, O_C) of each weight in [kmin, kmax], as the kernel of local
// syzygy conditions and agreement on chart overlaps
TangentReport glue_tangent(const FixedCurve& c, const ChartSet& charts, const std::vector<MultiPoly>& w,
                           int kmin = -16, int kmax = 16);

}  // namespace mu
