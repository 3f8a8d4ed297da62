#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nullcert/gaussian_rational.hpp"
#include "nullcert/monomial.hpp"

namespace nullcert {

struct Term {
  GaussianRational coeff;
  Monomial mono;

  bool operator==(const Term& o) const {
    return coeff == o.coeff && mono == o.mono;
  }
};

// Multivariate polynomial over the Gaussian rationals. Terms are kept
// canonical: strictly increasing in the monomial order, no zero
// coefficients. The zero polynomial has an empty term list and no defined
// total degree.
class Polynomial {
 public:
  explicit Polynomial(int n) : n_(n) {}

  // Canonicalizes an arbitrary term list: sorts, merges equal monomials,
  // drops zero coefficients. Throws DimensionError if any monomial has the
  // wrong variable count.
  static Polynomial from_terms(int n, std::vector<Term> raw);

  static Polynomial constant(int n, GaussianRational c);
  static Polynomial single(GaussianRational c, Monomial m);
  // zj as a polynomial, 0-based variable index j.
  static Polynomial variable(int n, int var);

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Total degree; absent for the zero polynomial.
  std::optional<int> total_degree() const;
  // Largest exponent of variable `var` (0-based); 0 for the zero polynomial.
  int degree_in(int var) const;
  bool is_constant() const;
  // Coefficient of the constant monomial (zero if absent).
  GaussianRational constant_coefficient() const;
  // Coefficient of an arbitrary monomial (zero if absent).
  GaussianRational coefficient(const Monomial& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
  // Multiply by c * mono.
  Polynomial times_term(const GaussianRational& c, const Monomial& m) const;

  bool operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  GaussianRational evaluate(std::span<const GaussianRational> point) const;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

// f written as sum_j coeff_j * zvar^j: the non-zero coefficient
// polynomials (with variable `var` cleared), ascending in j.
std::vector<std::pair<int, Polynomial>> extract_coeffs(const Polynomial& f,
                                                       int var);

// A finite system f_1..f_k of n-variable polynomials.
struct PolySystem {
  int n = 0;
  std::vector<Polynomial> polys;

  PolySystem() = default;
  PolySystem(int n_vars, std::vector<Polynomial> ps);

  int k() const { return static_cast<int>(polys.size()); }
};

}  // namespace nullcert
