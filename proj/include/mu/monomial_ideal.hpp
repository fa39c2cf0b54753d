#pragma once
// Monomial ideals: Stanley decompositions of S/M, Hilbert polynomials,
// and enumeration of standard monomials by torus weight.

#include <vector>

#include "mu/poly.hpp"
#include "mu/unipoly.hpp"

namespace mu {

// the monomials mono * k[free]
struct StanleyPiece {
    Exp mono;
    std::vector<int> free;
};

std::vector<Exp> minimalize(std::vector<Exp> gens, int n);
std::vector<StanleyPiece> stanley_decomposition(const std::vector<Exp>& gens, int n);
UniPoly hilbert_polynomial_monomial(const std::vector<Exp>& gens, int n);
// value of the Hilbert function in degree d (standard grading)
long hilbert_function_monomial(const std::vector<Exp>& gens, int n, int d);
int krull_dimension_monomial(const std::vector<Exp>& gens, int n);

// standard monomials of S/M with the given torus weight; throws if the weight space is infinite
std::vector<Exp> standard_monomials_of_weight(const std::vector<StanleyPiece>& pieces, const std::vector<int>& wts,
                                              int weight, int n);
bool finite_weight_spaces(const std::vector<StanleyPiece>& pieces, const std::vector<int>& wts);

}  // namespace mu
