#include "nullcert/serialize.hpp"

#include <json.hpp>

namespace nullcert {

namespace {

using nlohmann::json;

std::string fraction_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

bool plain_digits(const std::string& s) {
  if (s.empty()) return false;
  if (s.size() > 1 && s[0] == '0') return false;  // no leading zeros
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Strict canonical fraction: "-?D" or "-?D/D", reduced, positive
// denominator, no negative zero.
Rational parse_fraction(const std::string& s, const std::string& ctx) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body = body.substr(1);
  }
  std::string num_part = body;
  std::string den_part = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!plain_digits(num_part) || !plain_digits(den_part))
    throw ParseError(ctx + ": bad fraction syntax '" + s + "'");
  Int num(num_part);
  Int den(den_part);
  if (den.is_zero()) throw ParseError(ctx + ": zero denominator in '" + s + "'");
  if (neg && num.is_zero())
    throw ParseError(ctx + ": negative zero in '" + s + "'");
  if (gcd(num, den) != 1)
    throw ParseError(ctx + ": unreduced fraction '" + s + "'");
  if (neg) num = -num;
  return Rational(num, den);
}

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const Term& t : p.terms()) {
    json e = json::array();
    for (int x : t.mono.exps) e.push_back(x);
    terms.push_back({{"re", fraction_str(t.coeff.re())},
                     {"im", fraction_str(t.coeff.im())},
                     {"e", std::move(e)}});
  }
  return json{{"terms", std::move(terms)}};
}

Polynomial poly_from_json(const json& jp, int n, const std::string& ctx) {
  if (!jp.is_object() || !jp.contains("terms") || !jp["terms"].is_array())
    throw ParseError(ctx + ": expected an object with a 'terms' array");
  std::vector<Term> terms;
  std::vector<Monomial> seen;
  const json& jterms = jp["terms"];
  for (std::size_t ti = 0; ti < jterms.size(); ++ti) {
    const json& jt = jterms[ti];
    std::string tctx = ctx + ".terms[" + std::to_string(ti) + "]";
    if (!jt.is_object()) throw ParseError(tctx + ": expected an object");
    for (const char* field : {"re", "im", "e"}) {
      if (!jt.contains(field))
        throw ParseError(tctx + ": missing field '" + std::string(field) + "'");
    }
    if (!jt["re"].is_string() || !jt["im"].is_string())
      throw ParseError(tctx + ": coefficient parts must be fraction strings");
    Rational re = parse_fraction(jt["re"].get<std::string>(), tctx + ".re");
    Rational im = parse_fraction(jt["im"].get<std::string>(), tctx + ".im");
    const json& je = jt["e"];
    if (!je.is_array())
      throw ParseError(tctx + ".e: expected an array of exponents");
    if (static_cast<int>(je.size()) != n)
      throw ParseError(tctx + ".e: has " + std::to_string(je.size()) +
                       " exponents, system has " + std::to_string(n) +
                       " variables");
    Monomial mono(n);
    for (std::size_t j = 0; j < je.size(); ++j) {
      if (!je[j].is_number_integer())
        throw ParseError(tctx + ".e[" + std::to_string(j) + "]: expected an integer");
      long long e = je[j].get<long long>();
      if (e < 0)
        throw ParseError(tctx + ".e[" + std::to_string(j) + "]: negative exponent");
      if (e > 1000000)
        throw ParseError(tctx + ".e[" + std::to_string(j) + "]: exponent out of range");
      mono.exps[j] = static_cast<int>(e);
    }
    for (std::size_t prev = 0; prev < seen.size(); ++prev) {
      if (seen[prev] == mono)
        throw ParseError(ctx + ": duplicate monomial in terms[" +
                         std::to_string(prev) + "] and terms[" +
                         std::to_string(ti) + "]");
    }
    seen.push_back(mono);
    terms.push_back({GaussianRational(std::move(re), std::move(im)),
                     std::move(mono)});
  }
  return Polynomial::from_terms(n, std::move(terms));
}

json parse_top(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("document is not valid JSON");
  if (!j.is_object()) throw ParseError("document root must be an object");
  return j;
}

int read_n(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("document needs an integer field 'n'");
  long long n = j["n"].get<long long>();
  if (n < 1 || n > 64) throw ParseError("variable count out of range");
  return static_cast<int>(n);
}

}  // namespace

std::string emit_system(const PolySystem& sys) {
  json polys = json::array();
  for (const Polynomial& p : sys.polys) polys.push_back(poly_to_json(p));
  json doc{{"n", sys.n}, {"polys", std::move(polys)}};
  return doc.dump(2) + "\n";
}

PolySystem parse_system(const std::string& text) {
  json j = parse_top(text);
  int n = read_n(j);
  if (!j.contains("polys") || !j["polys"].is_array() || j["polys"].empty())
    throw ParseError("document needs a non-empty 'polys' array");
  std::vector<Polynomial> polys;
  const json& jp = j["polys"];
  for (std::size_t i = 0; i < jp.size(); ++i)
    polys.push_back(poly_from_json(jp[i], n, "polys[" + std::to_string(i) + "]"));
  return PolySystem(n, std::move(polys));
}

std::string emit_certificate(const Certificate& cert, int n) {
  json g = json::array();
  for (const Polynomial& p : cert.g) g.push_back(poly_to_json(p));
  json ansatz{{"kind", ansatz_kind_name(cert.ansatz.request.kind)}};
  switch (cert.ansatz.request.kind) {
    case AnsatzKind::TotalDegree:
      ansatz["degree"] = cert.ansatz.request.degree;
      break;
    case AnsatzKind::Brownawell:
      if (cert.ansatz.resolved_degree)
        ansatz["degree"] = *cert.ansatz.resolved_degree;
      break;
    case AnsatzKind::PerVariable:
      ansatz["caps"] = cert.ansatz.request.caps;
      break;
    case AnsatzKind::RankCapped:
      break;
  }
  json zeroed = json::array();
  for (const std::string& z : cert.zeroed_params) zeroed.push_back(z);
  json doc{{"n", n},
           {"g", std::move(g)},
           {"ansatz", std::move(ansatz)},
           {"strategy", cert.strategy},
           {"zeroed", std::move(zeroed)}};
  return doc.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text) {
  json j = parse_top(text);
  CertificateDocument doc;
  doc.n = read_n(j);
  if (!j.contains("g") || !j["g"].is_array() || j["g"].empty())
    throw ParseError("certificate needs a non-empty 'g' array");
  const json& jg = j["g"];
  for (std::size_t i = 0; i < jg.size(); ++i)
    doc.g.push_back(poly_from_json(jg[i], doc.n, "g[" + std::to_string(i) + "]"));

  if (!j.contains("strategy") || !j["strategy"].is_string())
    throw ParseError("certificate needs a string field 'strategy'");
  doc.strategy = j["strategy"].get<std::string>();

  if (!j.contains("ansatz") || !j["ansatz"].is_object())
    throw ParseError("certificate needs an object field 'ansatz'");
  const json& ja = j["ansatz"];
  if (!ja.contains("kind") || !ja["kind"].is_string())
    throw ParseError("ansatz needs a string field 'kind'");
  auto kind = parse_ansatz_kind(ja["kind"].get<std::string>());
  if (!kind)
    throw ParseError("unknown ansatz kind '" + ja["kind"].get<std::string>() + "'");
  doc.ansatz.kind = *kind;
  if (ja.contains("degree")) {
    if (!ja["degree"].is_number_integer() || ja["degree"].get<long long>() < 0)
      throw ParseError("ansatz degree must be a non-negative integer");
    int deg = static_cast<int>(ja["degree"].get<long long>());
    if (doc.ansatz.kind == AnsatzKind::Brownawell)
      doc.resolved_degree = deg;
    else
      doc.ansatz.degree = deg;
  }
  if (ja.contains("caps")) {
    if (!ja["caps"].is_array()) throw ParseError("ansatz caps must be an array");
    for (const json& c : ja["caps"]) {
      if (!c.is_number_integer() || c.get<long long>() < 0)
        throw ParseError("ansatz caps must be non-negative integers");
      doc.ansatz.caps.push_back(static_cast<int>(c.get<long long>()));
    }
  }

  if (j.contains("zeroed")) {
    if (!j["zeroed"].is_array()) throw ParseError("'zeroed' must be an array");
    for (const json& z : j["zeroed"]) {
      if (!z.is_string()) throw ParseError("'zeroed' entries must be strings");
      doc.zeroed.push_back(z.get<std::string>());
    }
  }
  return doc;
}

}  // namespace nullcert
