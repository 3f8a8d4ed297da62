#include "nullcert/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace nullcert {

std::pair<SolveOutcome, StepCounter> counted_solve(const PolySystem& sys,
                                                   const SolveOptions& opts) {
  StepCounter counter;
  CountingScope scope(counter);
  SolveOutcome outcome = solve(sys, opts);
  return {std::move(outcome), counter};
}

namespace {

Int cube(std::int64_t v) { return Int(v) * v * v; }
Int square(std::int64_t v) { return Int(v) * v; }

std::uint64_t ceil_log2(std::int64_t m) {
  std::uint64_t l = 0;
  std::int64_t p = 1;
  while (p < m) {
    p *= 2;
    ++l;
  }
  return l;
}

}  // namespace

Int theorem_bound(const SystemStats& stats) {
  std::uint64_t log_term = std::max<std::uint64_t>(1, ceil_log2(stats.m_sigma));
  Int bracket = square(stats.m_sigma) * log_term;

  std::int64_t m1 = stats.n == 1 ? stats.m_sigma : stats.m_sigma_level[0];
  bracket += std::min(cube(m1), cube(stats.d[0]));

  for (int l = 1; l <= stats.n - 2; ++l) {
    Int m_next = square(stats.m_sigma_level[static_cast<std::size_t>(l)]);
    Int d_next = square(stats.d[static_cast<std::size_t>(l)]);
    bracket += stats.N_level[static_cast<std::size_t>(l - 1)] *
               std::min(m_next, d_next);
  }

  if (stats.n >= 2) {
    Int tail = std::min(Int(stats.m_sigma),
                        Int(stats.d[static_cast<std::size_t>(stats.n - 1)]));
    bracket += stats.N_level[static_cast<std::size_t>(stats.n - 2)] * tail;
  }

  return bracket;
}

BoundReport make_bound_report(const SystemStats& stats,
                              const StepCounter& counter) {
  BoundReport report;
  report.stats = stats;
  report.bracket_value = theorem_bound(stats);
  report.s_empirical = counter.total();
  report.max_bits = counter.max_bits;
  if (!report.bracket_value.is_zero()) {
    report.ratio = Rational(Int(report.s_empirical), report.bracket_value);
    report.ratio_defined = true;
  }
  return report;
}

Polynomial permute_variables(const Polynomial& p, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != p.n())
    throw DimensionError("permutation length does not match variable count");
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    Monomial m(p.n());
    for (std::size_t j = 0; j < perm.size(); ++j)
      m.exps[j] = t.mono.exps[static_cast<std::size_t>(perm[j])];
    terms.push_back({t.coeff, std::move(m)});
  }
  return Polynomial::from_terms(p.n(), std::move(terms));
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size(), 0);
  for (std::size_t j = 0; j < perm.size(); ++j)
    inv[static_cast<std::size_t>(perm[j])] = static_cast<int>(j);
  return inv;
}

namespace {

PolySystem apply_permutation(const PolySystem& sys, std::span<const int> perm) {
  std::vector<Polynomial> polys;
  polys.reserve(sys.polys.size());
  for (const Polynomial& p : sys.polys) polys.push_back(permute_variables(p, perm));
  return PolySystem(sys.n, std::move(polys));
}

}  // namespace

std::pair<PolySystem, std::vector<int>> presort_variables(const PolySystem& sys) {
  std::vector<int> identity(static_cast<std::size_t>(sys.n));
  std::iota(identity.begin(), identity.end(), 0);

  if (sys.n > 8) {
    // Greedy: ascending partial degree, stable on the original index.
    SystemStats stats = system_stats(sys);
    std::vector<int> perm = identity;
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
      return stats.d[static_cast<std::size_t>(a)] <
             stats.d[static_cast<std::size_t>(b)];
    });
    return {apply_permutation(sys, perm), perm};
  }

  std::vector<int> best = identity;
  Int best_value = theorem_bound(system_stats(sys));
  std::vector<int> perm = identity;
  while (std::next_permutation(perm.begin(), perm.end())) {
    Int value = theorem_bound(system_stats(apply_permutation(sys, perm)));
    if (value < best_value) {
      best_value = value;
      best = perm;
    }
  }
  // next_permutation enumerates in lexicographic order starting just after
  // the identity, and only strict improvements replace the incumbent, so
  // ties keep the lexicographically smallest permutation.
  return {apply_permutation(sys, best), best};
}

}  // namespace nullcert
