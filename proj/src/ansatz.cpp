#include "nullcert/ansatz.hpp"

#include <algorithm>

namespace nullcert {

std::string ansatz_kind_name(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::RankCapped: return "rank-capped";
    case AnsatzKind::TotalDegree: return "total-degree";
    case AnsatzKind::PerVariable: return "per-variable";
    case AnsatzKind::Brownawell: return "brownawell";
  }
  return "?";
}

std::optional<AnsatzKind> parse_ansatz_kind(const std::string& name) {
  if (name == "rank-capped") return AnsatzKind::RankCapped;
  if (name == "total-degree") return AnsatzKind::TotalDegree;
  if (name == "per-variable") return AnsatzKind::PerVariable;
  if (name == "brownawell") return AnsatzKind::Brownawell;
  return std::nullopt;
}

namespace {

void check_basis_size(const Int& size, const AnsatzLimits& limits) {
  if (size > limits.max_basis) {
    throw Refusal("ansatz basis would have " + size.str() +
                  " monomials, above the limit of " +
                  std::to_string(limits.max_basis));
  }
}

// Monomials whose every restriction rank stays within the level bounds and
// whose last exponent stays within d_n. Bumping any exponent strictly
// increases every affected restriction rank, so each scan below terminates
// at the first violation.
std::vector<Monomial> rank_capped_basis(const SystemStats& st,
                                        const AnsatzLimits& limits) {
  int n = st.n;
  if (n == 1) {
    std::vector<Monomial> basis;
    for (int e = 0; e <= st.d[0]; ++e) basis.push_back(Monomial{e});
    check_basis_size(Int(basis.size()), limits);
    return basis;
  }
  std::vector<Monomial> basis;
  Monomial cur(n);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n - 1) {
      for (int e = 0; e <= st.d[static_cast<std::size_t>(n - 1)]; ++e) {
        cur.exps[static_cast<std::size_t>(j)] = e;
        basis.push_back(cur);
        check_basis_size(Int(basis.size()), limits);
      }
      cur.exps[static_cast<std::size_t>(j)] = 0;
      return;
    }
    for (int e = 0;; ++e) {
      cur.exps[static_cast<std::size_t>(j)] = e;
      if (mono_rank(cur.prefix(j + 1)) > st.N_level[static_cast<std::size_t>(j)])
        break;
      self(self, j + 1);
    }
    cur.exps[static_cast<std::size_t>(j)] = 0;
  };
  rec(rec, 0);
  std::sort(basis.begin(), basis.end(),
            [](const Monomial& a, const Monomial& b) { return mono_before(a, b); });
  return basis;
}

std::vector<Monomial> per_variable_basis(int n, const std::vector<int>& caps,
                                         const AnsatzLimits& limits) {
  Int size = 1;
  for (int c : caps) {
    if (c < 0) throw DomainError("per-variable cap must be non-negative");
    size *= Int(c) + 1;
  }
  check_basis_size(size, limits);
  std::vector<Monomial> basis;
  Monomial cur(n);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      basis.push_back(cur);
      return;
    }
    for (int e = 0; e <= caps[static_cast<std::size_t>(j)]; ++e) {
      cur.exps[static_cast<std::size_t>(j)] = e;
      self(self, j + 1);
    }
    cur.exps[static_cast<std::size_t>(j)] = 0;
  };
  rec(rec, 0);
  std::sort(basis.begin(), basis.end(),
            [](const Monomial& a, const Monomial& b) { return mono_before(a, b); });
  return basis;
}

}  // namespace

AnsatzSpec make_ansatz(const PolySystem& sys, const AnsatzRequest& request,
                       const AnsatzLimits& limits) {
  AnsatzSpec spec;
  spec.request = request;
  std::vector<Monomial> basis;

  switch (request.kind) {
    case AnsatzKind::RankCapped: {
      basis = rank_capped_basis(system_stats(sys), limits);
      break;
    }
    case AnsatzKind::TotalDegree: {
      if (request.degree < 0)
        throw DomainError("total-degree ansatz needs a non-negative degree");
      check_basis_size(count_monomials_up_to_degree(sys.n, request.degree),
                       limits);
      basis = monomials_up_to_degree(sys.n, request.degree);
      break;
    }
    case AnsatzKind::PerVariable: {
      if (static_cast<int>(request.caps.size()) != sys.n)
        throw DimensionError("per-variable ansatz needs one cap per variable");
      basis = per_variable_basis(sys.n, request.caps, limits);
      break;
    }
    case AnsatzKind::Brownawell: {
      int maxdeg = 0;
      for (const Polynomial& f : sys.polys)
        maxdeg = std::max(maxdeg, f.total_degree().value_or(0));
      Int d = 1;
      for (int j = 0; j < sys.n; ++j) d *= maxdeg;
      if (d > limits.brownawell_max_degree) {
        throw Refusal("brownawell degree " + d.str() + " above the limit of " +
                      std::to_string(limits.brownawell_max_degree));
      }
      int deg = static_cast<int>(d);
      spec.resolved_degree = deg;
      check_basis_size(count_monomials_up_to_degree(sys.n, deg), limits);
      basis = monomials_up_to_degree(sys.n, deg);
      break;
    }
  }

  spec.bases.assign(static_cast<std::size_t>(sys.k()), basis);
  return spec;
}

}  // namespace nullcert
