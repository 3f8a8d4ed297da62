#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "nullcert/certificate.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

// The exact difference sum_i f_i g_i - 1. A certificate is valid iff this
// is the zero polynomial; no tolerances anywhere.
struct Residual {
  Polynomial poly;

  bool is_zero() const { return poly.is_zero(); }
};

Residual verify(const PolySystem& sys, std::span<const Polynomial> g);
Residual verify(const PolySystem& sys, const Certificate& cert);

// A common zero over the Gaussian integers: every f_i evaluates to exactly
// zero at point (entries have denominator 1). values keeps the per-f_i
// evaluations as evidence.
struct ZeroWitness {
  std::vector<GaussianRational> point;
  std::vector<GaussianRational> values;
};

struct BoxOptions {
  // Refuse scans whose point count (2R+1)^(2n) exceeds this.
  std::int64_t max_points = 10000000;
};

// Exhaustive scan of all points with |Re|, |Im| <= R in every coordinate.
// Scan order is fixed: coordinate-major with z1 outermost, each coordinate
// running Re ascending from -R, then Im ascending. Returns the first
// witness in that order.
std::optional<ZeroWitness> box_zero_search(const PolySystem& sys, int radius,
                                           const BoxOptions& opts = {});

struct DenseOptions {
  // Refuse dense systems with more matrix cells than this.
  std::int64_t max_cells = 25000000;
};

// Reference certificate search over all g_i of total degree <= max_degree,
// using a plain dense textbook elimination written independently of the
// engine's solver. Returns a verified certificate or nothing.
std::optional<Certificate> dense_cert_search(const PolySystem& sys,
                                             int max_degree,
                                             const DenseOptions& opts = {});

}  // namespace nullcert
