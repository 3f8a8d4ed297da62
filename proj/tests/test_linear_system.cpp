#include <doctest.h>

#include <random>

#include "nullcert/gen.hpp"
#include "nullcert/linear_system.hpp"
#include "support/test_util.hpp"

using namespace nullcert;
using test::gr;
using test::poly;

namespace {

PolySystem gap_system() {
  return PolySystem(1, {poly(1, {{1, 0, {1}}}),                  // z1
                        poly(1, {{1, 0, {1}}, {-1, 0, {0}}})});  // z1 - 1
}

// Plain substitution check written without the solver's bookkeeping.
bool satisfies(const SparseLinearSystem& lin, const std::vector<GaussianRational>& values) {
  for (const MatrixRow& row : lin.rows) {
    GaussianRational acc = gr(0);
    for (const auto& [col, coeff] : row.entries) {
      acc += coeff * values[static_cast<std::size_t>(col)];
    }
    if (acc != row.rhs) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("assembled system layout") {
  PolySystem sys = gap_system();
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
  SparseLinearSystem lin = build_linear_system(sys, spec);

  // Columns poly-major with ranks ascending and stable names.
  REQUIRE(lin.cols.size() == 4);
  CHECK(lin.cols[0].name() == "b1_1");
  CHECK(lin.cols[1].name() == "b1_2");
  CHECK(lin.cols[2].name() == "b2_1");
  CHECK(lin.cols[3].name() == "b2_2");
  CHECK(lin.cols[0].poly == 0);
  CHECK(lin.cols[2].poly == 1);
  CHECK(lin.cols[1].basis == Monomial{1});

  // Rows 1, z1, z1^2 in natural order; rhs reads e1.
  REQUIRE(lin.rows.size() == 3);
  CHECK(lin.rows[0].constraint == Monomial{0});
  CHECK(lin.rows[1].constraint == Monomial{1});
  CHECK(lin.rows[2].constraint == Monomial{2});
  CHECK(lin.rows[0].rhs == gr(1));
  CHECK(lin.rows[1].rhs == gr(0));
  CHECK(lin.rows[2].rhs == gr(0));

  // Constant row: only f2's constant term -1 against b2_1.
  REQUIRE(lin.rows[0].entries.size() == 1);
  CHECK(lin.rows[0].entries[0].first == 2);
  CHECK(lin.rows[0].entries[0].second == gr(-1));

  // z1 row: b1_1 + b2_1 - b2_2.
  REQUIRE(lin.rows[1].entries.size() == 3);
  CHECK(lin.rows[1].entries[0] == std::pair{0, gr(1)});
  CHECK(lin.rows[1].entries[1] == std::pair{2, gr(1)});
  CHECK(lin.rows[1].entries[2] == std::pair{3, gr(-1)});
}

TEST_CASE("the target row exists even when no product reaches it") {
  // f = z1 alone never produces a constant product, yet the identity needs
  // the constant monomial, so row 1 is present, empty, with rhs 1.
  PolySystem sys(1, {poly(1, {{1, 0, {1}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
  SparseLinearSystem lin = build_linear_system(sys, spec);
  REQUIRE_FALSE(lin.rows.empty());
  CHECK(lin.rows[0].constraint == Monomial{0});
  CHECK(lin.rows[0].entries.empty());
  CHECK(lin.rows[0].rhs == gr(1));

  auto outcome = solve_sparse(lin);
  REQUIRE(std::holds_alternative<Infeasible>(outcome));
  CHECK(std::get<Infeasible>(outcome).row == 1);
}

TEST_CASE("elimination solves the pinned system with max-basis pivots") {
  PolySystem sys = gap_system();
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
  SparseLinearSystem lin = build_linear_system(sys, spec);
  auto outcome = solve_sparse(lin, PivotRule::MaxBasis);
  REQUIRE(std::holds_alternative<SparseSolution>(outcome));
  const auto& sol = std::get<SparseSolution>(outcome);
  // The max-basis rule pivots away from b1_1, leaving it free and zeroed:
  // g1 = z1, g2 = -1 - z1.
  REQUIRE(sol.values.size() == 4);
  CHECK(sol.values[0] == gr(0));
  CHECK(sol.values[1] == gr(1));
  CHECK(sol.values[2] == gr(-1));
  CHECK(sol.values[3] == gr(-1));
  REQUIRE(sol.zeroed.size() == 1);
  CHECK(lin.cols[static_cast<std::size_t>(sol.zeroed[0])].name() == "b1_1");
  CHECK(satisfies(lin, sol.values));
}

TEST_CASE("markowitz pivots also solve it") {
  PolySystem sys = gap_system();
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
  SparseLinearSystem lin = build_linear_system(sys, spec);
  auto outcome = solve_sparse(lin, PivotRule::Markowitz);
  REQUIRE(std::holds_alternative<SparseSolution>(outcome));
  CHECK(satisfies(lin, std::get<SparseSolution>(outcome).values));
}

TEST_CASE("infeasibility reports the first bad equation") {
  // f = z1*z2 + 1 with its rank-capped basis {1, z1, z2, z1*z2}: the last
  // row (z1^2*z2^2) forces the already-pinned coefficient of z1*z2 to zero.
  PolySystem sys(2, {poly(2, {{1, 0, {1, 1}}, {1, 0, {0, 0}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::rank_capped());
  SparseLinearSystem lin = build_linear_system(sys, spec);
  REQUIRE(lin.rows.size() == 7);
  auto outcome = solve_sparse(lin);
  REQUIRE(std::holds_alternative<Infeasible>(outcome));
  CHECK(std::get<Infeasible>(outcome).row == 7);
}

TEST_CASE("custom targets move the right-hand side") {
  // sum f_i g_i = z1 for f = {z1}: g1 = 1 works.
  PolySystem sys(1, {poly(1, {{1, 0, {1}}})});
  AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::total_degree(1));
  Polynomial target = poly(1, {{1, 0, {1}}});
  SparseLinearSystem lin = build_linear_system(sys, spec, target);
  auto outcome = solve_sparse(lin);
  REQUIRE(std::holds_alternative<SparseSolution>(outcome));
  const auto& sol = std::get<SparseSolution>(outcome);
  CHECK(sol.values[0] == gr(1));
  CHECK(satisfies(lin, sol.values));
}

TEST_CASE("solutions satisfy every original row on random systems") {
  std::mt19937_64 rng(7004);
  RandomSystemOptions opts;
  opts.max_n = 2;
  opts.max_degree = 2;
  opts.max_terms = 3;
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    PolySystem sys = random_system(rng, opts);
    AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::total_degree(2));
    SparseLinearSystem lin = build_linear_system(sys, spec);
    for (PivotRule rule : {PivotRule::MaxBasis, PivotRule::Markowitz}) {
      auto outcome = solve_sparse(lin, rule);
      if (const auto* sol = std::get_if<SparseSolution>(&outcome)) {
        ++solved;
        CHECK(satisfies(lin, sol->values));
        for (int col : sol->zeroed) {
          CHECK(sol->values[static_cast<std::size_t>(col)] == gr(0));
        }
      }
    }
  }
  CHECK(solved > 0);  // the corpus reliably contains solvable instances
}

TEST_CASE("rows are strictly ordered and entries sorted by column") {
  std::mt19937_64 rng(7005);
  RandomSystemOptions opts;
  opts.max_n = 3;
  opts.max_degree = 2;
  opts.max_terms = 4;
  for (int trial = 0; trial < 10; ++trial) {
    PolySystem sys = random_system(rng, opts);
    AnsatzSpec spec = make_ansatz(sys, AnsatzRequest::total_degree(1));
    SparseLinearSystem lin = build_linear_system(sys, spec);
    for (std::size_t r = 1; r < lin.rows.size(); ++r) {
      CHECK(mono_before(lin.rows[r - 1].constraint, lin.rows[r].constraint));
    }
    for (const MatrixRow& row : lin.rows) {
      for (std::size_t e = 1; e < row.entries.size(); ++e) {
        CHECK(row.entries[e - 1].first < row.entries[e].first);
      }
      for (const auto& [col, coeff] : row.entries) {
        CHECK_FALSE(coeff.is_zero());
        // The entry is the coefficient of constraint/basis in f_poly.
        auto quotient = row.constraint.divide(lin.cols[static_cast<std::size_t>(col)].basis);
        REQUIRE(quotient.has_value());
        CHECK(sys.polys[static_cast<std::size_t>(lin.cols[static_cast<std::size_t>(col)].poly)]
                  .coefficient(*quotient) == coeff);
      }
    }
  }
}

TEST_CASE("pivot rule names round-trip") {
  CHECK(pivot_rule_name(PivotRule::MaxBasis) == "max-basis");
  CHECK(pivot_rule_name(PivotRule::Markowitz) == "markowitz");
  CHECK(parse_pivot_rule("max-basis") == PivotRule::MaxBasis);
  CHECK(parse_pivot_rule("markowitz") == PivotRule::Markowitz);
  CHECK_FALSE(parse_pivot_rule("biggest").has_value());
}
