#include "nullcert/polynomial.hpp"

#include <algorithm>
#include <map>

namespace nullcert {

Polynomial Polynomial::from_terms(int n, std::vector<Term> raw) {
  for (const Term& t : raw) {
    if (t.mono.n() != n)
      throw DimensionError("term monomial has wrong variable count");
  }
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
    return mono_before(a.mono, b.mono);
  });
  Polynomial p(n);
  for (Term& t : raw) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
      count_assign();
    }
  }
  return p;
}

Polynomial Polynomial::constant(int n, GaussianRational c) {
  Polynomial p(n);
  if (!c.is_zero()) {
    p.terms_.push_back({std::move(c), Monomial::constant(n)});
    count_assign();
  }
  return p;
}

Polynomial Polynomial::single(GaussianRational c, Monomial m) {
  Polynomial p(m.n());
  if (!c.is_zero()) {
    p.terms_.push_back({std::move(c), std::move(m)});
    count_assign();
  }
  return p;
}

Polynomial Polynomial::variable(int n, int var) {
  return single(GaussianRational(1), Monomial::unit(n, var));
}

std::optional<int> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Terms are graded-sorted, so the last term carries the total degree.
  return terms_.back().mono.degree();
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const Term& t : terms_)
    d = std::max(d, t.mono.exps[static_cast<std::size_t>(var)]);
  return d;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].mono.is_constant());
}

GaussianRational Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_[0].mono.is_constant()) return terms_[0].coeff;
  return GaussianRational(0);
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    auto c = mono_compare(t.mono, m);
    if (c == std::strong_ordering::equal) return t.coeff;
    if (c == std::strong_ordering::greater) break;
  }
  return GaussianRational(0);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw DimensionError("polynomial sum: variable counts differ");
  Polynomial r(a.n_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = mono_compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c == std::strong_ordering::less) {
      r.terms_.push_back(a.terms_[i++]);
      count_assign();
    } else if (c == std::strong_ordering::greater) {
      r.terms_.push_back(b.terms_[j++]);
      count_assign();
    } else {
      GaussianRational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) {
        r.terms_.push_back({std::move(s), a.terms_[i].mono});
        count_assign();
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) {
    r.terms_.push_back(a.terms_[i]);
    count_assign();
  }
  for (; j < b.terms_.size(); ++j) {
    r.terms_.push_back(b.terms_[j]);
    count_assign();
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(n_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    r.terms_.push_back({-t.coeff, t.mono});
    count_assign();
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_)
    throw DimensionError("polynomial product: variable counts differ");
  Polynomial acc(a.n_);
  for (const Term& t : b.terms_) acc += a.times_term(t.coeff, t.mono);
  return acc;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
  return p.times_term(c, Monomial::constant(p.n()));
}

Polynomial Polynomial::times_term(const GaussianRational& c,
                                  const Monomial& m) const {
  Polynomial r(n_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    GaussianRational prod = t.coeff * c;
    if (prod.is_zero()) continue;  // exact arithmetic: only via zero inputs
    r.terms_.push_back({std::move(prod), t.mono * m});
    count_assign();
  }
  return r;
}

GaussianRational Polynomial::evaluate(
    std::span<const GaussianRational> point) const {
  if (static_cast<int>(point.size()) != n_)
    throw DimensionError("evaluation point has wrong variable count");
  // Power tables per variable, up to the largest exponent used.
  std::vector<std::vector<GaussianRational>> pows(
      static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    int maxe = degree_in(j);
    auto& tab = pows[static_cast<std::size_t>(j)];
    tab.reserve(static_cast<std::size_t>(maxe) + 1);
    tab.push_back(GaussianRational(1));
    for (int e = 1; e <= maxe; ++e)
      tab.push_back(tab.back() * point[static_cast<std::size_t>(j)]);
  }
  GaussianRational sum(0);
  for (const Term& t : terms_) {
    GaussianRational v = t.coeff;
    for (int j = 0; j < n_; ++j) {
      int e = t.mono.exps[static_cast<std::size_t>(j)];
      if (e != 0) v *= pows[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + t.coeff.to_string() + ")";
    if (!t.mono.is_constant()) s += "*" + t.mono.to_string();
  }
  return s;
}

std::vector<std::pair<int, Polynomial>> extract_coeffs(const Polynomial& f,
                                                       int var) {
  std::map<int, std::vector<Term>> groups;
  for (const Term& t : f.terms()) {
    Monomial m = t.mono;
    int e = m.exps[static_cast<std::size_t>(var)];
    m.exps[static_cast<std::size_t>(var)] = 0;
    groups[e].push_back({t.coeff, std::move(m)});
  }
  std::vector<std::pair<int, Polynomial>> out;
  out.reserve(groups.size());
  for (auto& [e, ts] : groups)
    out.emplace_back(e, Polynomial::from_terms(f.n(), std::move(ts)));
  return out;
}

PolySystem::PolySystem(int n_vars, std::vector<Polynomial> ps)
    : n(n_vars), polys(std::move(ps)) {
  if (n < 1) throw DimensionError("system needs at least one variable");
  if (polys.empty()) throw DimensionError("system needs at least one polynomial");
  for (const Polynomial& p : polys) {
    if (p.n() != n)
      throw DimensionError("system polynomial has wrong variable count");
  }
}

}  // namespace nullcert
