#pragma once

#include <cstdint>
#include <random>

#include "nullcert/polynomial.hpp"

namespace nullcert {

// Seeded random instance generation for corpora and acceptance runs. All
// draws go through uniform_below (rejection sampling on the raw 64-bit
// stream), so sequences are identical across platforms.
struct RandomSystemOptions {
  int max_n = 3;
  int max_k = 3;
  int max_degree = 3;   // per-variable exponent cap
  int coeff_bound = 2;  // |Re|, |Im| of integer coefficients
  int max_terms = 5;
};

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
int uniform_int(std::mt19937_64& rng, int lo, int hi);

Polynomial random_polynomial(std::mt19937_64& rng, int n,
                             const RandomSystemOptions& opts);
PolySystem random_system(std::mt19937_64& rng, const RandomSystemOptions& opts);

}  // namespace nullcert
