#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nullcert/polynomial.hpp"

namespace nullcert {

// A CNF formula: clauses of non-zero signed literals over variables
// 1..vars. Empty clauses are representable (they encode to the constant 1,
// making the formula unsatisfiable).
struct CnfInstance {
  int vars = 0;
  std::vector<std::vector<int>> clauses;
};

// DIMACS CNF: 'c' comment lines anywhere, one 'p cnf V C' header, clauses
// as 0-terminated integer lists (free layout across lines). The clause
// count must match the header. Errors carry line numbers.
CnfInstance parse_dimacs(const std::string& text);

// x_v maps to z_v. Per variable the polynomial z_v^2 - z_v, then per
// clause the product of (1 - z_v) for positive literals and z_v for
// negative ones, expanded to canonical form. Common zeros of the system
// are exactly the satisfying 0/1 assignments.
PolySystem encode_3sat(const CnfInstance& cnf);

// Simple undirected graph on vertices 1..vertices.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Edge list: '#' or 'c' comment lines, an optional 'p edge V E' header,
// then one edge per line as "u v" or "e u v" (1-based). The vertex count
// is the header value or the largest endpoint seen. Errors carry line
// numbers.
Graph parse_edge_list(const std::string& text);

// Per vertex the polynomial z_v^k - 1, then per edge (u,v) the polynomial
// sum_{d=0}^{k-1} z_u^(k-1-d) z_v^d. Common zeros assign k-th roots of
// unity with adjacent vertices distinct, so they exist iff the graph is
// k-colorable. Self-loops are encoded like any edge and make the vertex
// uncolorable for k > 1.
PolySystem encode_kcoloring(const Graph& graph, int k);

}  // namespace nullcert
