#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "nullcert/errors.hpp"

namespace nullcert {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bit width of |x|; zero for x == 0.
inline unsigned long bit_width(const Int& x) {
  if (x.is_zero()) return 0;
  return static_cast<unsigned long>(msb(abs(x))) + 1;
}

inline unsigned long bit_width(const Rational& q) {
  unsigned long a = bit_width(numerator(q));
  unsigned long b = bit_width(denominator(q));
  return a > b ? a : b;
}

// num/den as a canonical rational. The two-argument cpp_rational
// constructor rejects negative denominators, so normalize first.
inline Rational make_rational(Int num, Int den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace nullcert
