#include "nullcert/monomial.hpp"

#include <limits>

#include "nullcert/step_counter.hpp"

namespace nullcert {

int Monomial::degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (n() != o.n())
    throw DimensionError("monomial product: variable counts differ");
  Monomial r(n());
  for (std::size_t j = 0; j < exps.size(); ++j) r.exps[j] = exps[j] + o.exps[j];
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  if (n() != o.n())
    throw DimensionError("monomial division: variable counts differ");
  Monomial r(n());
  for (std::size_t j = 0; j < exps.size(); ++j) {
    int d = exps[j] - o.exps[j];
    if (d < 0) return std::nullopt;
    r.exps[j] = d;
  }
  return r;
}

Monomial Monomial::prefix(int l) const {
  Monomial r(l);
  for (int j = 0; j < l; ++j) r.exps[static_cast<std::size_t>(j)] = exps[static_cast<std::size_t>(j)];
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(j + 1);
    if (exps[j] != 1) s += "^" + std::to_string(exps[j]);
  }
  return s.empty() ? "1" : s;
}

std::strong_ordering mono_compare(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n())
    throw DimensionError("monomial comparison: variable counts differ");
  count_compare();
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t j = 0; j < a.exps.size(); ++j) {
    count_compare();
    if (a.exps[j] != b.exps[j]) {
      // Higher exponent at the first differing variable sorts earlier.
      return a.exps[j] > b.exps[j] ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Int binomial(const Int& a, long b) {
  if (b < 0 || a < 0 || a < b) return 0;
  Int res = 1;
  for (long i = 1; i <= b; ++i) {
    res *= a - b + i;
    res /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return res;
}

Int count_monomials_up_to_degree(int n, int max_degree) {
  if (max_degree < 0) return 0;
  return binomial(Int(n) + max_degree, n);
}

Int mono_rank(const Monomial& m) {
  int n = m.n();
  int d = m.degree();
  // Monomials of strictly lower degree.
  Int rank = count_monomials_up_to_degree(n, d - 1);
  // Position within the degree block: for each leading variable j, count
  // the block members that agree on variables before j and carry a higher
  // exponent at j. With rem the degree left for variables j..n, those
  // number C((n-j) + rem - e_j - 1, n-j) by the hockey-stick identity.
  Int pos = 1;
  int rem = d;
  for (int j = 1; j <= n - 1; ++j) {
    int e = m.exps[static_cast<std::size_t>(j - 1)];
    pos += binomial(Int(n - j) + rem - e - 1, n - j);
    rem -= e;
  }
  return rank + pos;
}

Monomial mono_unrank(const Int& rank, int n) {
  if (rank < 1) throw DomainError("monomial rank must be >= 1");
  if (n < 1) throw DimensionError("monomial unrank: need at least one variable");
  // Find the total degree: smallest d with C(n+d, n) >= rank.
  Int hi = 0;
  while (count_monomials_up_to_degree(n, static_cast<int>(hi)) < rank) {
    hi = hi.is_zero() ? Int(1) : hi * 2;
    if (hi > 1000000000) throw Refusal("monomial rank out of supported range");
  }
  long lo = 0;
  long hig = static_cast<long>(hi);
  while (lo < hig) {
    long mid = lo + (hig - lo) / 2;
    if (count_monomials_up_to_degree(n, static_cast<int>(mid)) >= rank)
      hig = mid;
    else
      lo = mid + 1;
  }
  int d = static_cast<int>(lo);

  // 0-based index within the degree-d block.
  Int idx = rank - count_monomials_up_to_degree(n, d - 1) - 1;
  Monomial m(n);
  int rem = d;
  for (int j = 1; j <= n - 1; ++j) {
    // Choose the largest exponent v at variable j whose preceding
    // sub-blocks (higher exponents) are all skipped by idx.
    long s = 0;  // s = rem - v, number of exponent levels skipped
    while (binomial(Int(n - j) + s, n - j) <= idx) ++s;
    idx -= binomial(Int(n - j) + s - 1, n - j);
    int v = rem - static_cast<int>(s);
    m.exps[static_cast<std::size_t>(j - 1)] = v;
    rem -= v;
  }
  m.exps[static_cast<std::size_t>(n - 1)] = rem;
  return m;
}

namespace {

void emit_degree_block(int n, int degree, std::vector<Monomial>& out) {
  Monomial cur(n);
  // Descending-lex walk: the first variable takes the highest exponent first.
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == n - 1) {
      cur.exps[static_cast<std::size_t>(j)] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur.exps[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, rem - v);
    }
  };
  if (n == 1) {
    cur.exps[0] = degree;
    out.push_back(cur);
    return;
  }
  rec(rec, 0, degree);
}

}  // namespace

std::vector<Monomial> first_monomials(int n, std::size_t count) {
  std::vector<Monomial> out;
  out.reserve(count);
  for (int t = 0; out.size() < count; ++t) emit_degree_block(n, t, out);
  out.resize(count);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int n, int max_degree) {
  std::vector<Monomial> out;
  for (int t = 0; t <= max_degree; ++t) emit_degree_block(n, t, out);
  return out;
}

}  // namespace nullcert
