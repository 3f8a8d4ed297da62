#include "nullcert/engine.hpp"

#include <stdexcept>

namespace nullcert {

NoSolution make_no_solution(int level, int equation) {
  return {level, equation,
          "No solution at Level " + std::to_string(level) + ", Equation " +
              std::to_string(equation)};
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Macaulay: return "macaulay";
    case Strategy::Levelwise: return "levelwise";
    case Strategy::Auto: return "auto";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "macaulay") return Strategy::Macaulay;
  if (name == "levelwise") return Strategy::Levelwise;
  if (name == "auto") return Strategy::Auto;
  return std::nullopt;
}

LevelSystem accumulate_rows(const LevelSystem& sys) {
  LevelSystem out = sys;
  for (std::size_t r = 1; r < out.rows.size(); ++r) {
    LevelRow& row = out.rows[r];
    const LevelRow& prev = out.rows[r - 1];
    if (row.coeffs.size() != prev.coeffs.size())
      throw DimensionError("level system rows have ragged polynomial counts");
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
      if (row.coeffs[i].size() != prev.coeffs[i].size())
        throw DimensionError("level system rows have ragged slot counts");
      for (std::size_t j = 0; j < row.coeffs[i].size(); ++j)
        row.coeffs[i][j] += prev.coeffs[i][j];
    }
    row.rhs += prev.rhs;
  }
  return out;
}

LevelSystem deaccumulate_rows(const LevelSystem& sys) {
  LevelSystem out = sys;
  for (std::size_t r = out.rows.size(); r-- > 1;) {
    LevelRow& row = out.rows[r];
    const LevelRow& prev = out.rows[r - 1];
    if (row.coeffs.size() != prev.coeffs.size())
      throw DimensionError("level system rows have ragged polynomial counts");
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
      if (row.coeffs[i].size() != prev.coeffs[i].size())
        throw DimensionError("level system rows have ragged slot counts");
      for (std::size_t j = 0; j < row.coeffs[i].size(); ++j)
        row.coeffs[i][j] -= prev.coeffs[i][j];
    }
    row.rhs -= prev.rhs;
  }
  return out;
}

Certificate extract_certificate(const SparseSolution& sol,
                                const AnsatzSpec& ansatz,
                                const PolySystem& sys) {
  std::size_t total = 0;
  for (const auto& basis : ansatz.bases) total += basis.size();
  if (sol.values.size() != total)
    throw DimensionError("solution length does not match the ansatz");

  Certificate cert;
  cert.ansatz = ansatz;
  std::size_t col = 0;
  for (int i = 0; i < sys.k(); ++i) {
    std::vector<Term> terms;
    for (const Monomial& beta : ansatz.bases[static_cast<std::size_t>(i)]) {
      const GaussianRational& v = sol.values[col++];
      terms.push_back({v, beta});
    }
    cert.g.push_back(Polynomial::from_terms(sys.n, std::move(terms)));
  }
  return cert;
}

namespace {

// Unknown names for a solved subsystem, prefixed by the identity path that
// led to it (empty at the top level).
std::vector<std::string> zeroed_names(const SparseLinearSystem& lin,
                                      const SparseSolution& sol,
                                      const std::string& ctx) {
  std::vector<std::string> names;
  names.reserve(sol.zeroed.size());
  for (int c : sol.zeroed)
    names.push_back(ctx + lin.cols[static_cast<std::size_t>(c)].name());
  return names;
}

Polynomial residual(const PolySystem& sys, const std::vector<Polynomial>& g) {
  Polynomial acc = Polynomial::constant(sys.n, GaussianRational(-1));
  for (int i = 0; i < sys.k(); ++i)
    acc += sys.polys[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
  return acc;
}

struct LevelFail {
  int level;
  int equation;
};

// State of one level-wise run. family[m-1][i] is f_{i+1} with the
// variables z_{m+1}..z_n stripped by repeatedly taking the z_j^0 part;
// family[n-1] is the input system itself.
struct Levelwise {
  const PolySystem& sys;
  SystemStats stats;
  std::vector<std::vector<Polynomial>> family;
  PivotRule pivot;
  AnsatzLimits limits;
  std::vector<std::string> zeroed;

  Levelwise(const PolySystem& s, const SolveOptions& opts)
      : sys(s), stats(system_stats(s)), pivot(opts.pivot), limits(opts.limits) {
    family.resize(static_cast<std::size_t>(sys.n));
    family[static_cast<std::size_t>(sys.n - 1)] = sys.polys;
    for (int m = sys.n - 1; m >= 1; --m) {
      auto& lower = family[static_cast<std::size_t>(m - 1)];
      for (const Polynomial& f : family[static_cast<std::size_t>(m)]) {
        Polynomial part(sys.n);
        for (const auto& [e, p] : extract_coeffs(f, m)) {
          if (e == 0) {
            part = p;
            break;
          }
        }
        lower.push_back(std::move(part));
      }
    }
  }

  using LevelResult = std::variant<std::vector<Polynomial>, LevelFail>;

  // Solve sum_i phi_i g_i = target where phi = family[m-1], unknowns
  // supported on variables z1..zm with the global per-variable caps.
  LevelResult solve_level(int m, const Polynomial& target,
                          const std::string& ctx) {
    if (m == 1) return solve_base(target, ctx);

    int var = m - 1;  // 0-based index of z_m
    const auto& phis = family[static_cast<std::size_t>(m - 1)];
    int cap = stats.d[static_cast<std::size_t>(var)];
    int delta = 0;
    for (const Polynomial& phi : phis)
      delta = std::max(delta, phi.degree_in(var));
    int top = std::max(delta + cap, target.degree_in(var));

    // Per-power parts of each phi and of the target.
    std::vector<std::vector<Polynomial>> parts(
        phis.size(), std::vector<Polynomial>(static_cast<std::size_t>(delta) + 1,
                                             Polynomial(sys.n)));
    for (std::size_t i = 0; i < phis.size(); ++i)
      for (auto& [e, p] : extract_coeffs(phis[i], var))
        parts[i][static_cast<std::size_t>(e)] = std::move(p);
    std::vector<Polynomial> tparts(static_cast<std::size_t>(top) + 1,
                                   Polynomial(sys.n));
    for (auto& [e, p] : extract_coeffs(target, var))
      tparts[static_cast<std::size_t>(e)] = std::move(p);

    LevelSystem raw;
    raw.rows.resize(static_cast<std::size_t>(top) + 1);
    for (int r = 0; r <= top; ++r) {
      LevelRow& row = raw.rows[static_cast<std::size_t>(r)];
      row.coeffs.assign(phis.size(),
                        std::vector<Polynomial>(static_cast<std::size_t>(cap) + 1,
                                                Polynomial(sys.n)));
      for (std::size_t i = 0; i < phis.size(); ++i) {
        for (int j = 0; j <= cap; ++j) {
          int p = r - j;
          if (p >= 0 && p <= delta)
            row.coeffs[i][static_cast<std::size_t>(j)] =
                parts[i][static_cast<std::size_t>(p)];
        }
      }
      row.rhs = tparts[static_cast<std::size_t>(r)];
    }

    LevelSystem acc = accumulate_rows(raw);

    // Sequential solve: row r introduces the power-r parts psi[i][r] (its
    // coefficient there is the level-(m-1) family); rows past the cap are
    // pure consistency checks.
    std::vector<std::vector<Polynomial>> psi(
        phis.size(), std::vector<Polynomial>(static_cast<std::size_t>(cap) + 1,
                                             Polynomial(sys.n)));
    for (int r = 0; r <= top; ++r) {
      const LevelRow& row = acc.rows[static_cast<std::size_t>(r)];
      Polynomial known(sys.n);
      int upto = std::min(r - 1, cap);
      for (std::size_t i = 0; i < phis.size(); ++i)
        for (int j = 0; j <= upto; ++j)
          known += row.coeffs[i][static_cast<std::size_t>(j)] *
                   psi[i][static_cast<std::size_t>(j)];
      if (r <= cap) {
        Polynomial sub_target = row.rhs - known;
        std::string sub_ctx = ctx + "L" + std::to_string(m) + ".E" +
                              std::to_string(r + 1) + "/";
        LevelResult child = solve_level(m - 1, sub_target, sub_ctx);
        if (std::holds_alternative<LevelFail>(child)) {
          LevelFail f = std::get<LevelFail>(child);
          if (r == 0) return f;  // the straight reduction chain failed
          return LevelFail{m, r + 1};
        }
        auto& sols = std::get<std::vector<Polynomial>>(child);
        for (std::size_t i = 0; i < phis.size(); ++i) {
          known += row.coeffs[i][static_cast<std::size_t>(r)] * sols[i];
          psi[i][static_cast<std::size_t>(r)] = std::move(sols[i]);
        }
        if (!((row.rhs - known).is_zero()))
          throw std::logic_error("levelwise invariant violated: solved identity does not hold");
      } else if (!((row.rhs - known).is_zero())) {
        return LevelFail{m, r + 1};
      }
    }

    std::vector<Polynomial> g;
    g.reserve(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i) {
      Polynomial gi(sys.n);
      for (int j = 0; j <= cap; ++j) {
        Monomial power(sys.n);
        power.exps[static_cast<std::size_t>(var)] = j;
        gi += psi[i][static_cast<std::size_t>(j)].times_term(GaussianRational(1),
                                                             power);
      }
      g.push_back(std::move(gi));
    }
    return g;
  }

  LevelResult solve_base(const Polynomial& target, const std::string& ctx) {
    const auto& phis = family[0];
    std::vector<Monomial> basis;
    for (int e = 0; e <= stats.d[0]; ++e) {
      Monomial m(sys.n);
      m.exps[0] = e;
      basis.push_back(m);
    }
    AnsatzSpec spec;
    spec.request = AnsatzRequest::per_variable(std::vector<int>(
        static_cast<std::size_t>(sys.n), 0));
    spec.request.caps[0] = stats.d[0];
    spec.bases.assign(phis.size(), basis);

    PolySystem base(sys.n, phis);
    SparseLinearSystem lin = build_linear_system(base, spec, target);
    SparseOutcome out = solve_sparse(lin, pivot);
    if (std::holds_alternative<Infeasible>(out))
      return LevelFail{1, std::get<Infeasible>(out).row};

    const SparseSolution& sol = std::get<SparseSolution>(out);
    for (const std::string& name : zeroed_names(lin, sol, ctx))
      zeroed.push_back(name);

    std::vector<Polynomial> g;
    g.reserve(phis.size());
    std::size_t col = 0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
      std::vector<Term> terms;
      for (const Monomial& beta : basis) terms.push_back({sol.values[col++], beta});
      g.push_back(Polynomial::from_terms(sys.n, std::move(terms)));
    }
    return g;
  }
};

// Core of the level-wise strategy. Returns a verified certificate, a
// NoSolution, or (via escalate) a request to fall back to macaulay when the
// candidate fails verification.
SolveOutcome levelwise_core(const PolySystem& sys, const SolveOptions& opts,
                            bool& escalate) {
  escalate = false;
  Levelwise run(sys, opts);
  auto result = run.solve_level(sys.n,
                                Polynomial::constant(sys.n, GaussianRational(1)),
                                "");
  if (std::holds_alternative<LevelFail>(result)) {
    LevelFail f = std::get<LevelFail>(result);
    return make_no_solution(f.level, f.equation);
  }

  auto& g = std::get<std::vector<Polynomial>>(result);
  if (!residual(sys, g).is_zero()) {
    escalate = true;
    return make_no_solution(sys.n, 0);  // placeholder; caller escalates
  }

  Certificate cert;
  cert.g = std::move(g);
  cert.ansatz = make_ansatz(sys, AnsatzRequest::per_variable(run.stats.d),
                            opts.limits);
  cert.strategy = "levelwise";
  cert.zeroed_params = std::move(run.zeroed);
  return cert;
}

}  // namespace

SolveOutcome solve_macaulay(const PolySystem& sys, const SolveOptions& opts) {
  AnsatzSpec spec = make_ansatz(sys, opts.ansatz, opts.limits);
  SparseLinearSystem lin = build_linear_system(sys, spec);
  SparseOutcome out = solve_sparse(lin, opts.pivot);
  if (std::holds_alternative<Infeasible>(out))
    return make_no_solution(sys.n, std::get<Infeasible>(out).row);

  const SparseSolution& sol = std::get<SparseSolution>(out);
  Certificate cert = extract_certificate(sol, spec, sys);
  cert.strategy = "macaulay";
  cert.zeroed_params = zeroed_names(lin, sol, "");
  if (!residual(sys, cert.g).is_zero())
    throw std::logic_error("macaulay invariant violated: certificate failed verification");
  return cert;
}

SolveOutcome solve_levelwise(const PolySystem& sys, const SolveOptions& opts) {
  bool escalate = false;
  SolveOutcome out = levelwise_core(sys, opts, escalate);
  if (escalate) return solve_macaulay(sys, opts);
  return out;
}

SolveOutcome solve(const PolySystem& sys, const SolveOptions& opts) {
  switch (opts.strategy) {
    case Strategy::Macaulay:
      return solve_macaulay(sys, opts);
    case Strategy::Levelwise:
      return solve_levelwise(sys, opts);
    case Strategy::Auto: {
      bool escalate = false;
      SolveOutcome out = levelwise_core(sys, opts, escalate);
      if (is_certificate(out)) return out;
      return solve_macaulay(sys, opts);
    }
  }
  throw std::logic_error("unreachable strategy");
}

}  // namespace nullcert
