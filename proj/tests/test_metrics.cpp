#include <doctest.h>

#include <random>

#include "nullcert/gen.hpp"
#include "nullcert/metrics.hpp"
#include "nullcert/oracle.hpp"
#include "support/test_util.hpp"

using namespace nullcert;
using test::gr;
using test::poly;

namespace {

PolySystem gap_system() {
  return PolySystem(1, {poly(1, {{1, 0, {1}}}),
                        poly(1, {{1, 0, {1}}, {-1, 0, {0}}})});
}

// The bound bracket restated from its definition, using brute force over
// the stats fields only.
Int bracket_reference(const SystemStats& s) {
  auto cube = [](Int x) { return x * x * x; };
  auto square = [](Int x) { return x * x; };
  Int msig(s.m_sigma);
  Int lg(0);
  Int pow(1);
  while (pow < msig) {
    pow *= 2;
    lg += 1;
  }
  if (lg < 1) lg = 1;
  Int total = square(msig) * lg;
  Int m1 = s.n == 1 ? msig : Int(s.m_sigma_level[0]);
  total += std::min(cube(m1), cube(Int(s.d[0])));
  for (int l = 1; l <= s.n - 2; ++l) {
    Int m_next(s.m_sigma_level[static_cast<std::size_t>(l)]);
    Int d_next(s.d[static_cast<std::size_t>(l)]);
    total += s.N_level[static_cast<std::size_t>(l - 1)] *
             std::min(square(m_next), square(d_next));
  }
  if (s.n >= 2) {
    total += s.N_level[static_cast<std::size_t>(s.n - 2)] *
             std::min(msig, Int(s.d[static_cast<std::size_t>(s.n - 1)]));
  }
  return total;
}

}  // namespace

TEST_CASE("pinned bracket values") {
  PolySystem unit(1, {poly(1, {{1, 0, {0}}})});
  CHECK(theorem_bound(system_stats(unit)) == 1);
  CHECK(theorem_bound(system_stats(gap_system())) == 19);
  PolySystem zero(1, {Polynomial(1)});
  CHECK(theorem_bound(system_stats(zero)) == 0);
}

TEST_CASE("bracket matches an independent restatement on random systems") {
  std::mt19937_64 rng(7011);
  RandomSystemOptions opts;
  for (int trial = 0; trial < 100; ++trial) {
    SystemStats s = system_stats(random_system(rng, opts));
    CHECK(theorem_bound(s) == bracket_reference(s));
  }
}

TEST_CASE("counted solves are deterministic") {
  auto [first, c1] = counted_solve(gap_system());
  auto [second, c2] = counted_solve(gap_system());
  CHECK(is_certificate(first));
  CHECK(is_certificate(second));
  CHECK(c1 == c2);
  CHECK(c1.arith_ops > 0);
  CHECK(c1.comparisons > 0);
  CHECK(c1.assignments > 0);
  CHECK(c1.max_bits >= 1);
  CHECK(std::get<Certificate>(first).g[0] == std::get<Certificate>(second).g[0]);
}

TEST_CASE("bound reports pair the measured count with the bracket") {
  SystemStats stats = system_stats(gap_system());
  StepCounter counter;
  counter.assignments = 10;
  counter.arith_ops = 20;
  counter.comparisons = 8;
  counter.max_bits = 5;
  BoundReport report = make_bound_report(stats, counter);
  CHECK(report.bracket_value == 19);
  CHECK(report.s_empirical == 38);
  CHECK(report.ratio_defined);
  CHECK(report.ratio == make_rational(Int(38), Int(19)));
  CHECK(report.max_bits == 5);

  PolySystem zero(1, {Polynomial(1)});
  BoundReport empty = make_bound_report(system_stats(zero), counter);
  CHECK_FALSE(empty.ratio_defined);
  CHECK(empty.bracket_value == 0);
}

TEST_CASE("variable permutations rewrite exponents") {
  // p = z1^2 * z2 under perm [1, 0] becomes z1 * z2^2.
  Polynomial p = poly(2, {{1, 0, {2, 1}}});
  std::vector<int> perm = {1, 0};
  CHECK(permute_variables(p, perm) == poly(2, {{1, 0, {1, 2}}}));

  std::vector<int> tri = {2, 0, 1};
  CHECK(inverse_permutation(tri) == std::vector<int>{1, 2, 0});

  std::mt19937_64 rng(7012);
  RandomSystemOptions opts;
  opts.max_degree = 2;
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial q = random_polynomial(rng, 3, opts);
    Polynomial back = permute_variables(permute_variables(q, tri),
                                        inverse_permutation(tri));
    CHECK(back == q);
  }
}

TEST_CASE("permutation preserves evaluation up to point reordering") {
  std::mt19937_64 rng(7013);
  RandomSystemOptions opts;
  opts.max_degree = 2;
  std::vector<int> perm = {2, 0, 1};
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial q = random_polynomial(rng, 3, opts);
    Polynomial qp = permute_variables(q, perm);
    std::vector<GaussianRational> point;
    for (int j = 0; j < 3; ++j) {
      point.push_back(gr(uniform_int(rng, -2, 2), uniform_int(rng, -2, 2)));
    }
    // Position j of the permuted polynomial reads original variable perm[j].
    std::vector<GaussianRational> moved(3, gr(0));
    for (int j = 0; j < 3; ++j) moved[static_cast<std::size_t>(j)] =
        point[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    CHECK(qp.evaluate(moved) == q.evaluate(point));
  }
}

TEST_CASE("presort picks the bracket-minimizing order") {
  // z1^5 + z2 weighs far more on the first coordinate; swapping helps.
  PolySystem sys(2, {poly(2, {{1, 0, {5, 0}}, {1, 0, {0, 1}}})});
  auto [sorted, perm] = presort_variables(sys);
  CHECK(perm == std::vector<int>{1, 0});
  CHECK(theorem_bound(system_stats(sorted)) <
        theorem_bound(system_stats(sys)));
  CHECK(sorted.polys[0] == poly(2, {{1, 0, {1, 0}}, {1, 0, {0, 5}}}));
}

TEST_CASE("presort keeps already-optimal orders and is deterministic") {
  PolySystem sys = gap_system();
  auto [sorted, perm] = presort_variables(sys);
  CHECK(perm == std::vector<int>{0});
  CHECK(sorted.polys[0] == sys.polys[0]);

  // Symmetric system: ties resolve to the identity.
  PolySystem sym(2, {poly(2, {{1, 0, {1, 0}}, {1, 0, {0, 1}}})});
  auto [ssorted, sperm] = presort_variables(sym);
  CHECK(sperm == std::vector<int>{0, 1});
}

TEST_CASE("presort preserves solvability") {
  std::mt19937_64 rng(7014);
  RandomSystemOptions opts;
  opts.max_n = 2;
  opts.max_degree = 2;
  opts.max_terms = 3;
  for (int trial = 0; trial < 12; ++trial) {
    PolySystem sys = random_system(rng, opts);
    auto [sorted, perm] = presort_variables(sys);
    auto original = solve(sys);
    auto permuted = solve(sorted);
    CHECK(is_certificate(original) == is_certificate(permuted));
    if (const auto* cert = std::get_if<Certificate>(&permuted)) {
      // Mapping the certificate back must verify against the original.
      std::vector<int> inv = inverse_permutation(perm);
      std::vector<Polynomial> g;
      for (const Polynomial& p : cert->g) g.push_back(permute_variables(p, inv));
      CHECK(verify(sys, g).is_zero());
    }
  }
}
