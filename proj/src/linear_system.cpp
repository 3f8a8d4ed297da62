#include "nullcert/linear_system.hpp"

#include <map>
#include <stdexcept>

namespace nullcert {

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_before(a, b);
  }
};

}  // namespace

SparseLinearSystem build_linear_system(const PolySystem& sys,
                                       const AnsatzSpec& ansatz,
                                       const Polynomial& target) {
  if (static_cast<int>(ansatz.bases.size()) != sys.k())
    throw DimensionError("ansatz does not match the system's polynomial count");
  if (target.n() != sys.n)
    throw DimensionError("target has wrong variable count");

  SparseLinearSystem lin;
  lin.n = sys.n;
  for (int i = 0; i < sys.k(); ++i) {
    for (const Monomial& beta : ansatz.bases[static_cast<std::size_t>(i)]) {
      if (beta.n() != sys.n)
        throw DimensionError("ansatz monomial has wrong variable count");
      lin.cols.push_back({i, beta, mono_rank(beta)});
    }
  }

  std::map<Monomial, std::map<int, GaussianRational>, MonoLess> rows;
  for (const Term& t : target.terms()) rows[t.mono];  // ensure presence
  int col = 0;
  for (int i = 0; i < sys.k(); ++i) {
    for (const Monomial& beta : ansatz.bases[static_cast<std::size_t>(i)]) {
      for (const Term& t : sys.polys[static_cast<std::size_t>(i)].terms()) {
        rows[t.mono * beta][col] += t.coeff;
        count_assign();
      }
      ++col;
    }
  }

  lin.rows.reserve(rows.size());
  for (auto& [mu, entries] : rows) {
    MatrixRow row;
    row.constraint = mu;
    row.entries.assign(entries.begin(), entries.end());
    row.rhs = target.coefficient(mu);
    lin.rows.push_back(std::move(row));
  }
  return lin;
}

SparseLinearSystem build_linear_system(const PolySystem& sys,
                                       const AnsatzSpec& ansatz) {
  return build_linear_system(sys, ansatz,
                             Polynomial::constant(sys.n, GaussianRational(1)));
}

std::string pivot_rule_name(PivotRule rule) {
  switch (rule) {
    case PivotRule::MaxBasis: return "max-basis";
    case PivotRule::Markowitz: return "markowitz";
  }
  return "?";
}

std::optional<PivotRule> parse_pivot_rule(const std::string& name) {
  if (name == "max-basis") return PivotRule::MaxBasis;
  if (name == "markowitz") return PivotRule::Markowitz;
  return std::nullopt;
}

namespace {

struct PivotRow {
  int col;
  std::map<int, GaussianRational> coeffs;  // never contains a pivot column
  GaussianRational rhs;
};

// True when column a is preferred over column b: later basis monomial
// first, then the smaller polynomial index.
bool max_basis_prefers(const SparseLinearSystem& lin, int a, int b) {
  const ColumnKey& ka = lin.cols[static_cast<std::size_t>(a)];
  const ColumnKey& kb = lin.cols[static_cast<std::size_t>(b)];
  count_compare();
  if (ka.rank != kb.rank) return ka.rank > kb.rank;
  count_compare();
  return ka.poly < kb.poly;
}

}  // namespace

SparseOutcome solve_sparse(const SparseLinearSystem& lin, PivotRule rule) {
  // Static column occupancy for the Markowitz rule.
  std::vector<int> occupancy(lin.cols.size(), 0);
  if (rule == PivotRule::Markowitz) {
    for (const MatrixRow& row : lin.rows)
      for (const auto& [c, v] : row.entries)
        ++occupancy[static_cast<std::size_t>(c)];
  }

  std::vector<PivotRow> pivots;
  std::vector<int> pivot_of_col(lin.cols.size(), -1);

  for (std::size_t r = 0; r < lin.rows.size(); ++r) {
    std::map<int, GaussianRational> work;
    for (const auto& [c, v] : lin.rows[r].entries) {
      work.emplace(c, v);
      count_assign();
    }
    GaussianRational rhs = lin.rows[r].rhs;
    count_assign();

    // Reduce against every pivot row. Pivot rows carry no pivot columns,
    // so a single pass cannot reintroduce an eliminated column.
    for (const PivotRow& p : pivots) {
      auto it = work.find(p.col);
      if (it == work.end()) continue;
      GaussianRational factor = it->second;
      work.erase(it);
      if (factor.is_zero()) continue;
      for (const auto& [c, v] : p.coeffs) {
        auto& cell = work[c];
        cell -= factor * v;
        count_assign();
        if (cell.is_zero()) work.erase(c);
      }
      rhs -= factor * p.rhs;
      count_assign();
    }

    if (work.empty()) {
      if (!rhs.is_zero()) return Infeasible{static_cast<int>(r) + 1};
      continue;  // dependent row
    }

    // Pivot selection.
    int best = work.begin()->first;
    for (auto it = std::next(work.begin()); it != work.end(); ++it) {
      int cand = it->first;
      if (rule == PivotRule::Markowitz) {
        count_compare();
        int oc = occupancy[static_cast<std::size_t>(cand)];
        int ob = occupancy[static_cast<std::size_t>(best)];
        if (oc != ob) {
          if (oc < ob) best = cand;
          continue;
        }
      }
      if (max_basis_prefers(lin, cand, best)) best = cand;
    }

    // Normalize the new pivot row.
    GaussianRational lead = work.at(best);
    work.erase(best);
    PivotRow prow;
    prow.col = best;
    for (auto& [c, v] : work) {
      prow.coeffs.emplace(c, v / lead);
      count_assign();
    }
    prow.rhs = rhs / lead;
    count_assign();

    // Jordan step: clear the new pivot column from existing pivot rows.
    for (PivotRow& p : pivots) {
      auto it = p.coeffs.find(best);
      if (it == p.coeffs.end()) continue;
      GaussianRational factor = it->second;
      p.coeffs.erase(it);
      for (const auto& [c, v] : prow.coeffs) {
        auto& cell = p.coeffs[c];
        cell -= factor * v;
        count_assign();
        if (cell.is_zero()) p.coeffs.erase(c);
      }
      p.rhs -= factor * prow.rhs;
      count_assign();
    }

    pivot_of_col[static_cast<std::size_t>(best)] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(prow));
  }

  // Free parameters are zero; each pivot row then determines its column
  // directly, because its remaining coefficients touch only free columns.
  SparseSolution sol;
  sol.values.assign(lin.cols.size(), GaussianRational(0));
  for (std::size_t c = 0; c < lin.cols.size(); ++c) {
    int p = pivot_of_col[c];
    if (p < 0) {
      sol.zeroed.push_back(static_cast<int>(c));
    } else {
      sol.values[c] = pivots[static_cast<std::size_t>(p)].rhs;
    }
    count_assign();
  }

  // Substitution re-check against the original rows.
  for (const MatrixRow& row : lin.rows) {
    GaussianRational acc(0);
    for (const auto& [c, v] : row.entries)
      acc += v * sol.values[static_cast<std::size_t>(c)];
    if (!(acc == row.rhs))
      throw std::logic_error("solver invariant violated: substitution check failed");
  }

  return sol;
}

}  // namespace nullcert
