#pragma once

#include <optional>
#include <string>

#include "nullcert/certificate.hpp"
#include "nullcert/linear_system.hpp"
#include "nullcert/system_stats.hpp"

namespace nullcert {

// macaulay   flatten sum_i f_i g_i = 1 into one sparse linear system over
//            the requested ansatz and eliminate
// levelwise  peel off the last variable, solve the per-power identities
//            sequentially (recursing on the variable count), reusing each
//            lower solution; candidates are re-verified, and a candidate
//            that fails verification escalates to macaulay
// auto       levelwise first, macaulay on any levelwise dead-end
enum class Strategy { Macaulay, Levelwise, Auto };

std::string strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

struct SolveOptions {
  Strategy strategy = Strategy::Auto;
  // Basis choice for the macaulay path (levelwise derives its own caps).
  AnsatzRequest ansatz;
  PivotRule pivot = PivotRule::MaxBasis;
  AnsatzLimits limits;
};

// Data form of one level's per-power identities. In row r, coeffs[i][j]
// multiplies the unknown z_level^j-part of g_{i+1} and equals the
// z_level^(r-j)-part of f_{i+1} at this level (the zero polynomial when
// out of range); rhs is the target's power-r part.
struct LevelRow {
  std::vector<std::vector<Polynomial>> coeffs;
  Polynomial rhs{0};
};

struct LevelSystem {
  std::vector<LevelRow> rows;
};

// Prefix-sum transform row_r <- row_1 + ... + row_r. Solution sets are in
// exact bijection with the input's; with the standard target e_1 every
// right-hand side becomes 1. Throws DimensionError on ragged rows.
LevelSystem accumulate_rows(const LevelSystem& sys);

// Inverse transform row_r <- row_r - row_{r-1}.
LevelSystem deaccumulate_rows(const LevelSystem& sys);

// Rebuilds the g_i from a solution vector over the ansatz columns
// (poly-major, basis order). strategy is filled by the caller.
Certificate extract_certificate(const SparseSolution& sol,
                                const AnsatzSpec& ansatz,
                                const PolySystem& sys);

SolveOutcome solve_macaulay(const PolySystem& sys, const SolveOptions& opts = {});
SolveOutcome solve_levelwise(const PolySystem& sys, const SolveOptions& opts = {});
SolveOutcome solve(const PolySystem& sys, const SolveOptions& opts = {});

}  // namespace nullcert
