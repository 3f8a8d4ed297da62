#include "nullcert/encode.hpp"

#include <algorithm>
#include <sstream>

#include "nullcert/errors.hpp"

namespace nullcert {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

long long parse_int_token(const std::string& tok, int line_no,
                          const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                     " '" + tok + "'");
  return v;
}

}  // namespace

CnfInstance parse_dimacs(const std::string& text) {
  CnfInstance cnf;
  bool header_seen = false;
  long long declared_clauses = 0;
  std::vector<int> pending;

  std::vector<std::string> lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    int line_no = static_cast<int>(li) + 1;
    const std::string& line = lines[li];
    if (blank(line)) continue;
    std::istringstream in(line);
    std::string tok;
    in >> tok;
    if (tok == "c") continue;
    if (tok == "p") {
      if (header_seen)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      std::string fmt;
      std::string v_tok;
      std::string c_tok;
      if (!(in >> fmt >> v_tok >> c_tok) || fmt != "cnf")
        throw ParseError("line " + std::to_string(line_no) +
                         ": header must be 'p cnf V C'");
      std::string extra;
      if (in >> extra)
        throw ParseError("line " + std::to_string(line_no) +
                         ": trailing tokens after header");
      long long v = parse_int_token(v_tok, line_no, "variable count");
      long long c = parse_int_token(c_tok, line_no, "clause count");
      if (v < 1) throw ParseError("line " + std::to_string(line_no) +
                                  ": variable count must be positive");
      if (c < 0) throw ParseError("line " + std::to_string(line_no) +
                                  ": clause count must be non-negative");
      cnf.vars = static_cast<int>(v);
      declared_clauses = c;
      header_seen = true;
      continue;
    }
    if (!header_seen)
      throw ParseError("line " + std::to_string(line_no) +
                       ": clause before 'p cnf' header");
    // Clause tokens, 0-terminated, free layout.
    std::istringstream body(line);
    while (body >> tok) {
      long long lit = parse_int_token(tok, line_no, "literal");
      if (lit == 0) {
        cnf.clauses.push_back(pending);
        pending.clear();
        continue;
      }
      long long var = lit < 0 ? -lit : lit;
      if (var > cnf.vars)
        throw ParseError("line " + std::to_string(line_no) + ": literal " +
                         std::to_string(lit) + " out of range (V=" +
                         std::to_string(cnf.vars) + ")");
      pending.push_back(static_cast<int>(lit));
    }
  }

  if (!header_seen) throw ParseError("missing 'p cnf' header");
  if (!pending.empty())
    throw ParseError("unterminated clause at end of input (missing 0)");
  if (static_cast<long long>(cnf.clauses.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                     " clauses but " + std::to_string(cnf.clauses.size()) +
                     " present");
  return cnf;
}

PolySystem encode_3sat(const CnfInstance& cnf) {
  if (cnf.vars < 1) throw DomainError("CNF needs at least one variable");
  int n = cnf.vars;
  std::vector<Polynomial> polys;

  for (int v = 0; v < n; ++v) {
    Monomial sq(n);
    sq.exps[static_cast<std::size_t>(v)] = 2;
    Polynomial p = Polynomial::single(GaussianRational(1), sq) -
                   Polynomial::variable(n, v);
    polys.push_back(std::move(p));
  }

  for (const std::vector<int>& clause : cnf.clauses) {
    Polynomial prod = Polynomial::constant(n, GaussianRational(1));
    for (int lit : clause) {
      int v = (lit < 0 ? -lit : lit) - 1;
      if (v < 0 || v >= n) throw DomainError("literal out of range");
      Polynomial factor =
          lit > 0 ? Polynomial::constant(n, GaussianRational(1)) -
                        Polynomial::variable(n, v)
                  : Polynomial::variable(n, v);
      prod *= factor;
    }
    polys.push_back(std::move(prod));
  }

  return PolySystem(n, std::move(polys));
}

Graph parse_edge_list(const std::string& text) {
  Graph g;
  bool header_seen = false;
  long long declared_edges = -1;
  int max_vertex = 0;

  std::vector<std::string> lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    int line_no = static_cast<int>(li) + 1;
    const std::string& line = lines[li];
    if (blank(line)) continue;
    std::istringstream in(line);
    std::string tok;
    in >> tok;
    if (tok == "c" || tok[0] == '#') continue;
    if (tok == "p") {
      if (header_seen)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      std::string fmt;
      std::string v_tok;
      std::string e_tok;
      if (!(in >> fmt >> v_tok >> e_tok) || fmt != "edge")
        throw ParseError("line " + std::to_string(line_no) +
                         ": header must be 'p edge V E'");
      long long v = parse_int_token(v_tok, line_no, "vertex count");
      long long e = parse_int_token(e_tok, line_no, "edge count");
      if (v < 1) throw ParseError("line " + std::to_string(line_no) +
                                  ": vertex count must be positive");
      if (e < 0) throw ParseError("line " + std::to_string(line_no) +
                                  ": edge count must be non-negative");
      g.vertices = static_cast<int>(v);
      declared_edges = e;
      header_seen = true;
      continue;
    }
    std::string u_tok = tok;
    if (tok == "e") {
      if (!(in >> u_tok))
        throw ParseError("line " + std::to_string(line_no) + ": edge needs two endpoints");
    }
    std::string v_tok;
    if (!(in >> v_tok))
      throw ParseError("line " + std::to_string(line_no) + ": edge needs two endpoints");
    std::string extra;
    if (in >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after edge");
    long long u = parse_int_token(u_tok, line_no, "vertex");
    long long v = parse_int_token(v_tok, line_no, "vertex");
    if (u < 1 || v < 1)
      throw ParseError("line " + std::to_string(line_no) + ": vertices are 1-based");
    if (header_seen && (u > g.vertices || v > g.vertices))
      throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                       std::to_string(std::max(u, v)) + " above header count " +
                       std::to_string(g.vertices));
    g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
  }

  if (!header_seen) g.vertices = max_vertex;
  if (declared_edges >= 0 &&
      static_cast<long long>(g.edges.size()) != declared_edges)
    throw ParseError("header declares " + std::to_string(declared_edges) +
                     " edges but " + std::to_string(g.edges.size()) + " present");
  if (g.vertices < 1) throw ParseError("graph has no vertices");
  return g;
}

PolySystem encode_kcoloring(const Graph& graph, int k) {
  if (k < 1) throw DomainError("coloring needs k >= 1");
  if (graph.vertices < 1) throw DomainError("graph needs at least one vertex");
  int n = graph.vertices;
  std::vector<Polynomial> polys;

  for (int v = 0; v < n; ++v) {
    Monomial pw(n);
    pw.exps[static_cast<std::size_t>(v)] = k;
    polys.push_back(Polynomial::single(GaussianRational(1), pw) -
                    Polynomial::constant(n, GaussianRational(1)));
  }

  for (const auto& [u, v] : graph.edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw DimensionError("edge endpoint out of range");
    std::vector<Term> terms;
    for (int d = 0; d < k; ++d) {
      Monomial m(n);
      m.exps[static_cast<std::size_t>(u - 1)] += k - 1 - d;
      m.exps[static_cast<std::size_t>(v - 1)] += d;
      terms.push_back({GaussianRational(1), std::move(m)});
    }
    polys.push_back(Polynomial::from_terms(n, std::move(terms)));
  }

  return PolySystem(n, std::move(polys));
}

}  // namespace nullcert
