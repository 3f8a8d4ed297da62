#pragma once

#include <string>
#include <utility>

#include "nullcert/errors.hpp"
#include "nullcert/numeric.hpp"
#include "nullcert/step_counter.hpp"

namespace nullcert {

// Exact complex scalar with rational real and imaginary parts. Parts are
// always canonical: reduced to lowest terms with a positive denominator
// (cpp_rational maintains this through arithmetic). Every arithmetic
// operation ticks the active step counter once and reports the bit width
// of its result.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT: implicit integer literals
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational from_parts(const Int& re_num, const Int& re_den,
                                     const Int& im_num, const Int& im_den) {
    return GaussianRational(make_rational(re_num, re_den),
                            make_rational(im_num, im_den));
  }

  // The imaginary unit.
  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const {
    count_compare();
    return re_.is_zero() && im_.is_zero();
  }
  bool is_one() const {
    count_compare();
    return re_ == 1 && im_.is_zero();
  }
  bool is_real() const { return im_.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    GaussianRational r(a.re_ + b.re_, a.im_ + b.im_);
    r.record();
    return r;
  }

  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    GaussianRational r(a.re_ - b.re_, a.im_ - b.im_);
    r.record();
    return r;
  }

  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    GaussianRational r(a.re_ * b.re_ - a.im_ * b.im_,
                       a.re_ * b.im_ + a.im_ * b.re_);
    r.record();
    return r;
  }

  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    Rational nrm = b.re_ * b.re_ + b.im_ * b.im_;
    if (nrm.is_zero()) throw DomainError("division by zero");
    GaussianRational r((a.re_ * b.re_ + a.im_ * b.im_) / nrm,
                       (a.im_ * b.re_ - a.re_ * b.im_) / nrm);
    r.record();
    return r;
  }

  GaussianRational operator-() const {
    GaussianRational r(-re_, -im_);
    r.record();
    return r;
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  GaussianRational conj() const {
    GaussianRational r(re_, -im_);
    r.record();
    return r;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    count_compare();
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  unsigned long bits() const {
    unsigned long a = bit_width(re_);
    unsigned long b = bit_width(im_);
    return a > b ? a : b;
  }

  // "a/b" or "a/b+c/di" style; exact, for messages and logs.
  std::string to_string() const;

 private:
  void record() const {
    count_arith();
    observe_bits(bits());
  }

  Rational re_{0};
  Rational im_{0};
};

}  // namespace nullcert
