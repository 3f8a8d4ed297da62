#include <doctest.h>

#include "nullcert/system_stats.hpp"
#include "support/test_util.hpp"

using namespace nullcert;
using test::poly;

TEST_CASE("stats of a univariate pair") {
  PolySystem sys(1, {poly(1, {{1, 0, {1}}}),                  // z1
                     poly(1, {{1, 0, {1}}, {-1, 0, {0}}})});  // z1 - 1
  SystemStats s = system_stats(sys);
  CHECK(s.n == 1);
  CHECK(s.k == 2);
  CHECK(s.m_i == std::vector<std::int64_t>{1, 2});
  CHECK(s.m_sigma == 3);
  CHECK(s.d == std::vector<int>{1});
  CHECK(s.m_sigma_level.empty());
  CHECK(s.N_level.empty());
}

TEST_CASE("stats of a bivariate system") {
  // f1 = z1*z2 + 1, f2 = z1^2 + z2.
  PolySystem sys(2, {poly(2, {{1, 0, {1, 1}}, {1, 0, {0, 0}}}),
                     poly(2, {{1, 0, {2, 0}}, {1, 0, {0, 1}}})});
  SystemStats s = system_stats(sys);
  CHECK(s.m_sigma == 4);
  CHECK(s.d == std::vector<int>{2, 1});
  // Distinct (z1-part, z2-exponent) pairs: two per polynomial.
  REQUIRE(s.m_sigma_level.size() == 1);
  CHECK(s.m_sigma_level[0] == 4);
  // Largest z1-prefix rank: z1^2 restricted to one variable has rank 3.
  REQUIRE(s.N_level.size() == 1);
  CHECK(s.N_level[0] == 3);
}

TEST_CASE("duplicate prefixes collapse in the level counts") {
  // f = z2 + z2^2: both monomials restrict to the constant z1-prefix but
  // carry different z2-exponents, so they stay distinct pairs.
  PolySystem sys(2, {poly(2, {{1, 0, {0, 1}}, {1, 0, {0, 2}}})});
  SystemStats s = system_stats(sys);
  CHECK(s.m_sigma_level[0] == 2);
  CHECK(s.N_level[0] == 1);

  // f = z2 * (1 + z1): prefixes 1 and z1 with the same z2-exponent.
  PolySystem sys2(2, {poly(2, {{1, 0, {0, 1}}, {1, 0, {1, 1}}})});
  SystemStats s2 = system_stats(sys2);
  CHECK(s2.m_sigma_level[0] == 2);
  CHECK(s2.N_level[0] == 2);
}

TEST_CASE("zero polynomials contribute nothing") {
  PolySystem sys(2, {Polynomial(2), poly(2, {{1, 0, {0, 0}}})});
  SystemStats s = system_stats(sys);
  CHECK(s.m_i == std::vector<std::int64_t>{0, 1});
  CHECK(s.m_sigma == 1);
  CHECK(s.d == std::vector<int>{0, 0});
  CHECK(s.N_level[0] == 1);
}
