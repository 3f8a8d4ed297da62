#include "nullcert/gaussian_rational.hpp"

#include <sstream>

namespace nullcert {

namespace {

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  os << "/" << denominator(q);
  return os.str();
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return rational_str(re_);
  std::string imag = rational_str(im_) + "i";
  if (re_.is_zero()) return imag;
  if (im_ > 0) return rational_str(re_) + "+" + imag;
  return rational_str(re_) + imag;  // the sign travels with the numerator
}

}  // namespace nullcert
