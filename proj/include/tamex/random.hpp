#pragma once

#include <cstdint>
#include <random>

#include "tamex/valuation.hpp"

namespace tamex {

using Rng = std::mt19937_64;

Scalar random_scalar(Field f, Rng& rng, bool nonzero = false);
Polynomial random_polynomial(std::size_t n, Field f, Rng& rng, unsigned max_terms = 4, unsigned max_degree = 3);
// Integer-over-small-denominator positive weight.
Weight random_weight(std::size_t n, Rng& rng, unsigned max_value = 6);
Permutation random_permutation(std::size_t n, Rng& rng);
// Upper triangular x_i + c_i + P_i(x_{i+1}, ..., x_n) with nonzero diagonal scalings.
TameWord random_triangular(std::size_t n, Field f, Rng& rng, unsigned max_degree = 3);
// Product of affine, elementary and permutation generators.
TameWord random_tame_word(std::size_t n, Field f, Rng& rng, unsigned length = 3, unsigned max_degree = 2);

struct AxiomReport {
  std::size_t trials = 0;
  std::size_t multiplicativity_failures = 0;
  std::size_t ultrametric_failures = 0;
};

// nu(PQ) = nu(P) + nu(Q) and nu(P + Q) >= min(nu(P), nu(Q)) on random inputs.
AxiomReport check_valuation_axioms(std::size_t n, Field f, std::size_t trials, std::uint64_t seed);

}  // namespace tamex
