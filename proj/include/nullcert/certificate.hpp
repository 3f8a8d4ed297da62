#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nullcert/ansatz.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

// A combination sum_i f_i g_i = 1 witnessing that the system has no common
// complex zero. Every certificate handed out by the engine or the dense
// oracle has been re-verified exactly before being returned.
struct Certificate {
  std::vector<Polynomial> g;
  AnsatzSpec ansatz;
  // Which path produced it: "macaulay", "levelwise" or "dense-oracle".
  std::string strategy;
  // Free parameters that were set to zero, by unknown name.
  std::vector<std::string> zeroed_params;
};

// No certificate exists within the ansatz that was tried. level/equation
// locate the first unsatisfiable equation; the message renders them in the
// fixed wording "No solution at Level L, Equation E".
struct NoSolution {
  int level = 0;
  int equation = 0;
  std::string message;
};

NoSolution make_no_solution(int level, int equation);

using SolveOutcome = std::variant<Certificate, NoSolution>;

inline bool is_certificate(const SolveOutcome& o) {
  return std::holds_alternative<Certificate>(o);
}

}  // namespace nullcert
