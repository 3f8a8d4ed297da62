#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullcert/polynomial.hpp"
#include "nullcert/system_stats.hpp"

namespace nullcert {

// How the monomial support allowed in each unknown g_i is chosen:
//   RankCapped   every monomial whose restriction to z1..zl has rank at
//                most N^(l) for each l < n and whose zn-exponent is at most
//                d_n; for n = 1 this is all powers z1^0..z1^{d1}
//   TotalDegree  all monomials of total degree <= degree
//   PerVariable  all monomials with exponent of z_{j+1} <= caps[j]
//   Brownawell   TotalDegree with degree = (max total degree of the f_i)^n
enum class AnsatzKind { RankCapped, TotalDegree, PerVariable, Brownawell };

std::string ansatz_kind_name(AnsatzKind kind);
std::optional<AnsatzKind> parse_ansatz_kind(const std::string& name);

struct AnsatzRequest {
  AnsatzKind kind = AnsatzKind::RankCapped;
  int degree = 0;            // TotalDegree
  std::vector<int> caps;     // PerVariable

  static AnsatzRequest rank_capped() { return {}; }
  static AnsatzRequest total_degree(int d) {
    return {AnsatzKind::TotalDegree, d, {}};
  }
  static AnsatzRequest per_variable(std::vector<int> caps) {
    return {AnsatzKind::PerVariable, 0, std::move(caps)};
  }
  static AnsatzRequest brownawell() { return {AnsatzKind::Brownawell, 0, {}}; }
};

struct AnsatzLimits {
  // Brownawell degrees above this are refused rather than silently capped.
  int brownawell_max_degree = 16;
  // Largest permitted basis size per unknown polynomial.
  std::int64_t max_basis = 500000;
};

// Resolved ansatz: the request plus the concrete per-g_i monomial bases in
// natural order. resolved_degree records the computed Brownawell degree.
struct AnsatzSpec {
  AnsatzRequest request;
  std::optional<int> resolved_degree;
  std::vector<std::vector<Monomial>> bases;
};

AnsatzSpec make_ansatz(const PolySystem& sys, const AnsatzRequest& request,
                       const AnsatzLimits& limits = {});

}  // namespace nullcert
