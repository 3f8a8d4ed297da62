#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nullcert/errors.hpp"
#include "nullcert/numeric.hpp"

namespace nullcert {

// A monomial in n variables z1..zn, stored as its exponent vector.
// The ordering used everywhere is graded: lower total degree first, and
// within equal total degree the monomial with the higher exponent at the
// first differing variable comes first. This makes each degree block run
// z1^t, z1^{t-1} z2, ..., zn^t.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(int n) : exps(static_cast<std::size_t>(n), 0) {}
  Monomial(std::initializer_list<int> e) : exps(e) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  static Monomial constant(int n) { return Monomial(n); }
  // zj^1 for 0-based variable index j.
  static Monomial unit(int n, int var) {
    Monomial m(n);
    m.exps[static_cast<std::size_t>(var)] = 1;
    return m;
  }

  int n() const { return static_cast<int>(exps.size()); }
  int degree() const;
  bool is_constant() const { return degree() == 0; }

  // Product: exponent-wise sum. Throws DimensionError on length mismatch.
  Monomial operator*(const Monomial& o) const;

  // Exponent-wise difference this - o, or nullopt if any entry would be
  // negative.
  std::optional<Monomial> divide(const Monomial& o) const;

  // Restriction to the first l variables (an l-variable monomial).
  Monomial prefix(int l) const;

  bool operator==(const Monomial&) const = default;

  std::string to_string() const;
};

// Three-way comparison in the graded order above; ticks the active step
// counter per elementary comparison. Throws DimensionError on mismatched
// variable counts.
std::strong_ordering mono_compare(const Monomial& a, const Monomial& b);

inline bool mono_before(const Monomial& a, const Monomial& b) {
  return mono_compare(a, b) == std::strong_ordering::less;
}

// C(a, b) for b >= 0, exact; zero when a < b or b < 0.
Int binomial(const Int& a, long b);

// 1-based position of m in the graded order over its variable count.
Int mono_rank(const Monomial& m);

// Inverse of mono_rank: the monomial at 1-based position `rank` among
// n-variable monomials. Throws DomainError for rank < 1.
Monomial mono_unrank(const Int& rank, int n);

// The first `count` monomials in order, i.e. ranks 1..count.
std::vector<Monomial> first_monomials(int n, std::size_t count);

// All monomials of total degree <= max_degree, in order.
std::vector<Monomial> monomials_up_to_degree(int n, int max_degree);

// C(n + max_degree, n): how many monomials have total degree <= max_degree.
Int count_monomials_up_to_degree(int n, int max_degree);

}  // namespace nullcert
