#pragma once

#include <span>
#include <utility>

#include "nullcert/engine.hpp"
#include "nullcert/step_counter.hpp"
#include "nullcert/system_stats.hpp"

namespace nullcert {

// solve() with a step counter installed for its whole duration. Counts are
// deterministic for identical (system, options).
std::pair<SolveOutcome, StepCounter> counted_solve(const PolySystem& sys,
                                                   const SolveOptions& opts = {});

// The operation-count bound bracket with c = 1:
//   m_sigma^2 * L + min{[m^(1)]^3, d_1^3}
//   + sum_{l=1}^{n-2} N^(l) * min{[m^(l+1)]^2, d_{l+1}^2}
//   + N^(n-1) * min{m_sigma, d_n}
// where L = max(1, ceil(log2 m_sigma)). For n = 1 only the first two terms
// remain, with m^(1) = m_sigma.
Int theorem_bound(const SystemStats& stats);

// The measured step count next to the bracket. No claim that the measured
// count stays below the bracket is made; the ratio is reported data.
// ratio_defined is false when the bracket is zero.
struct BoundReport {
  SystemStats stats;
  Int bracket_value;
  std::uint64_t s_empirical = 0;
  Rational ratio;
  bool ratio_defined = false;
  std::uint64_t max_bits = 0;
};

BoundReport make_bound_report(const SystemStats& stats,
                              const StepCounter& counter);

// Variable order minimizing the bracket: exhaustive over all permutations
// for n <= 8 (ties to the lexicographically smallest permutation), greedy
// ascending partial degree above that. perm[j] is the original 0-based
// variable index placed at position j.
std::pair<PolySystem, std::vector<int>> presort_variables(const PolySystem& sys);

// Rewrites p over permuted variables: the exponent at position j becomes
// the input's exponent at perm[j].
Polynomial permute_variables(const Polynomial& p, std::span<const int> perm);

std::vector<int> inverse_permutation(std::span<const int> perm);

}  // namespace nullcert
