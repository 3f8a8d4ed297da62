#pragma once

#include <cstdint>
#include <vector>

#include "nullcert/polynomial.hpp"

namespace nullcert {

// Structural measurements of a system f_1..f_k that drive basis sizing and
// the operation-count bound:
//   m_i            monomial count of f_i, m_sigma their sum
//   d[j]           largest exponent of z_{j+1} anywhere in the system
//   m_sigma_level  for each l in 1..n-1: the total count over i of distinct
//                  pairs (restriction of a monomial of f_i to z1..zl,
//                  exponent of z_{l+1})
//   N_level        for each l in 1..n-1: the largest rank among the
//                  restrictions to z1..zl of monomials of the system
//                  (at least 1, the rank of the constant monomial)
struct SystemStats {
  int n = 0;
  int k = 0;
  std::vector<std::int64_t> m_i;
  std::int64_t m_sigma = 0;
  std::vector<int> d;
  std::vector<std::int64_t> m_sigma_level;
  std::vector<Int> N_level;
};

SystemStats system_stats(const PolySystem& sys);

}  // namespace nullcert
