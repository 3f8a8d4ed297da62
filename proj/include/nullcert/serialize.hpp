#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullcert/certificate.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

// System document: JSON object
//   { "n": int, "polys": [ { "terms": [ { "re": "a/b", "im": "c/d",
//     "e": [ints] } ] } ] }
// Coefficients are exact fraction strings; emission always writes the
// canonical "a/b" form with positive denominator and reduced terms, in
// natural term order. The parser accepts bare integers "a" as well, but
// rejects unreduced or non-canonical fractions, exponent lists of the
// wrong length, and duplicate monomials, naming the offending position.
std::string emit_system(const PolySystem& sys);
PolySystem parse_system(const std::string& text);

// Certificate document: JSON object
//   { "n": int, "g": [polys as above], "ansatz": { "kind": str,
//     "degree"?: int, "caps"?: [ints] }, "strategy": str,
//     "zeroed": [names] }
struct CertificateDocument {
  int n = 0;
  std::vector<Polynomial> g;
  AnsatzRequest ansatz;
  std::optional<int> resolved_degree;
  std::string strategy;
  std::vector<std::string> zeroed;
};

std::string emit_certificate(const Certificate& cert, int n);
CertificateDocument parse_certificate(const std::string& text);

}  // namespace nullcert
