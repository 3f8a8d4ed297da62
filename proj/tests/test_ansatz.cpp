#include <doctest.h>

#include <algorithm>

#include "nullcert/ansatz.hpp"
#include "support/test_util.hpp"

using namespace nullcert;
using test::poly;

namespace {

bool sorted_naturally(const std::vector<Monomial>& basis) {
  return std::is_sorted(basis.begin(), basis.end(), test::natural_before);
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (AnsatzKind k : {AnsatzKind::RankCapped, AnsatzKind::TotalDegree,
                       AnsatzKind::PerVariable, AnsatzKind::Brownawell}) {
    auto back = parse_ansatz_kind(ansatz_kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK_FALSE(parse_ansatz_kind("cubic").has_value());
}

TEST_CASE("rank-capped basis for one variable is all powers up to d1") {
  PolySystem sys(1, {poly(1, {{1, 0, {1}}}), poly(1, {{1, 0, {1}}, {-1, 0, {0}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
  REQUIRE(spec.bases.size() == 2);
  for (const auto& basis : spec.bases) {
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == Monomial{0});
    CHECK(basis[1] == Monomial{1});
  }
}

TEST_CASE("rank-capped basis respects prefix rank caps") {
  // f = z1*z2 + 1: prefix ranks reach 2, z2-degree reaches 1, so the basis
  // is exactly {1, z1, z2, z1*z2}.
  PolySystem sys(2, {poly(2, {{1, 0, {1, 1}}, {1, 0, {0, 0}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
  REQUIRE(spec.bases.size() == 1);
  const auto& basis = spec.bases[0];
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == Monomial{0, 0});
  CHECK(basis[1] == Monomial{1, 0});
  CHECK(basis[2] == Monomial{0, 1});
  CHECK(basis[3] == Monomial{1, 1});
  CHECK(sorted_naturally(basis));
}

TEST_CASE("total-degree basis is the full block") {
  PolySystem sys(2, {poly(2, {{1, 0, {1, 1}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::total_degree(2));
  REQUIRE(spec.bases.size() == 1);
  CHECK(spec.bases[0].size() == 6);
  CHECK(sorted_naturally(spec.bases[0]));
  CHECK(spec.bases[0] == test::enumerate_sorted(2, 2));
}

TEST_CASE("per-variable basis obeys the caps") {
  PolySystem sys(2, {poly(2, {{1, 0, {1, 1}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::per_variable({1, 2}));
  REQUIRE(spec.bases.size() == 1);
  const auto& basis = spec.bases[0];
  REQUIRE(basis.size() == 6);
  CHECK(sorted_naturally(basis));
  for (const Monomial& m : basis) {
    CHECK(m.exps[0] <= 1);
    CHECK(m.exps[1] <= 2);
  }
  CHECK_THROWS_AS(make_ansatz(sys, AnsatzRequest::per_variable({1})), DimensionError);
}

TEST_CASE("brownawell resolves the degree or refuses") {
  // Max total degree 2 in two variables resolves to 2^2 = 4.
  PolySystem sys(2, {poly(2, {{1, 0, {1, 1}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::brownawell());
  REQUIRE(spec.resolved_degree.has_value());
  CHECK(*spec.resolved_degree == 4);
  CHECK(spec.bases[0].size() == 15);  // C(2+4, 2)

  // Degree 3 in three variables wants 27 > 16: refused, naming the degree.
  PolySystem big(3, {poly(3, {{1, 0, {1, 1, 1}}})});
  CHECK_THROWS_WITH_AS(make_ansatz(big, AnsatzRequest::brownawell()),
                       doctest::Contains("27"), Refusal);
  AnsatzLimits relaxed;
  relaxed.brownawell_max_degree = 27;
  CHECK(make_ansatz(big, AnsatzRequest::brownawell(), relaxed).resolved_degree == 27);
}

TEST_CASE("oversized bases are refused") {
  PolySystem sys(3, {poly(3, {{1, 0, {1, 1, 1}}})});
  AnsatzLimits tight;
  tight.max_basis = 10;
  CHECK_THROWS_AS(make_ansatz(sys, AnsatzRequest::per_variable({9, 9, 9}), tight),
                  Refusal);
  CHECK_THROWS_AS(make_ansatz(sys, AnsatzRequest::total_degree(9), tight), Refusal);
}

TEST_CASE("rank-capped basis stays within the per-variable envelope") {
  std::mt19937_64 rng(7003);
  RandomSystemOptions opts;
  opts.max_degree = 2;
  opts.max_terms = 3;
  for (int trial = 0; trial < 10; ++trial) {
    PolySystem sys = random_system(rng, opts);
    SystemStats stats = system_stats(sys);
    AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
    for (const auto& basis : spec.bases) {
      CHECK(sorted_naturally(basis));
      for (const Monomial& m : basis) {
        // The last variable is capped directly by d_n.
        CHECK(m.exps[static_cast<std::size_t>(sys.n - 1)] <=
              stats.d[static_cast<std::size_t>(sys.n - 1)]);
        for (int l = 1; l < sys.n; ++l) {
          CHECK(mono_rank(m.prefix(l)) <= stats.N_level[static_cast<std::size_t>(l - 1)]);
        }
      }
    }
  }
}
