#include "nullcert/gen.hpp"

#include <limits>
#include <vector>

namespace nullcert {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below: bound must be positive");
  const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Reject the tail so every residue class is equally likely.
  const std::uint64_t limit = kMax - kMax % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw DomainError("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(uniform_below(rng, span));
}

Polynomial random_polynomial(std::mt19937_64& rng, int n,
                             const RandomSystemOptions& opts) {
  int terms = uniform_int(rng, 1, opts.max_terms);
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(terms));
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) exps[static_cast<std::size_t>(j)] = uniform_int(rng, 0, opts.max_degree);
    int re = uniform_int(rng, -opts.coeff_bound, opts.coeff_bound);
    int im = uniform_int(rng, -opts.coeff_bound, opts.coeff_bound);
    out.push_back(Term{GaussianRational(Rational(re), Rational(im)), Monomial(std::move(exps))});
  }
  // from_terms merges duplicates; cancellation to zero is a legal instance.
  return Polynomial::from_terms(n, std::move(out));
}

PolySystem random_system(std::mt19937_64& rng, const RandomSystemOptions& opts) {
  int n = uniform_int(rng, 1, opts.max_n);
  int k = uniform_int(rng, 1, opts.max_k);
  std::vector<Polynomial> polys;
  polys.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) polys.push_back(random_polynomial(rng, n, opts));
  return PolySystem(n, std::move(polys));
}

}  // namespace nullcert
