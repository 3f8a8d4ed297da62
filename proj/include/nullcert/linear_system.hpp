#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nullcert/ansatz.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

// One unknown coefficient b_{i,beta}: the coefficient of basis monomial
// beta inside g_{i+1}. rank caches the natural-order rank of beta; it keys
// the pivot rule. Unknowns are named "b{i+1}_{rank}".
struct ColumnKey {
  int poly = 0;
  Monomial basis;
  Int rank;

  std::string name() const {
    return "b" + std::to_string(poly + 1) + "_" + rank.str();
  }
};

// Row for one constraint monomial mu: sum of entries*unknowns = rhs, where
// the entry at column (i, beta) is the coefficient of mu/beta in f_{i+1}.
struct MatrixRow {
  Monomial constraint;
  std::vector<std::pair<int, GaussianRational>> entries;  // sorted by column
  GaussianRational rhs;
};

// The assembled linear system for sum_i f_i g_i = target. Rows are sorted
// by the natural order of their constraint monomial, so with target = 1 the
// right-hand side reads e_1 literally. Columns are grouped by polynomial
// index, bases in natural order within each group.
struct SparseLinearSystem {
  int n = 0;
  std::vector<ColumnKey> cols;
  std::vector<MatrixRow> rows;
};

SparseLinearSystem build_linear_system(const PolySystem& sys,
                                       const AnsatzSpec& ansatz,
                                       const Polynomial& target);

// target = 1.
SparseLinearSystem build_linear_system(const PolySystem& sys,
                                       const AnsatzSpec& ansatz);

// Pivot selection within a reduced row:
//   MaxBasis   the entry whose basis monomial is last in the natural
//              order, ties to the smallest polynomial index
//   Markowitz  the entry whose column appears in the fewest rows of the
//              original matrix, ties by the MaxBasis key
enum class PivotRule { MaxBasis, Markowitz };

std::string pivot_rule_name(PivotRule rule);
std::optional<PivotRule> parse_pivot_rule(const std::string& name);

struct SparseSolution {
  std::vector<GaussianRational> values;  // one per column
  std::vector<int> zeroed;               // free columns forced to 0, ascending
};

// 1-based index of the first equation proved unsatisfiable.
struct Infeasible {
  int row = 0;
};

using SparseOutcome = std::variant<SparseSolution, Infeasible>;

// Exact Gauss-Jordan elimination processing rows in order. Free parameters
// are set to zero. A solution is re-checked against every original row
// before it is returned.
SparseOutcome solve_sparse(const SparseLinearSystem& lin,
                           PivotRule rule = PivotRule::MaxBasis);

}  // namespace nullcert
