#include "nullcert/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nullcert {

Residual verify(const PolySystem& sys, std::span<const Polynomial> g) {
  if (static_cast<int>(g.size()) != sys.k())
    throw DimensionError("certificate has wrong polynomial count");
  for (const Polynomial& gi : g) {
    if (gi.n() != sys.n)
      throw DimensionError("certificate polynomial has wrong variable count");
  }
  Polynomial acc = Polynomial::constant(sys.n, GaussianRational(-1));
  for (int i = 0; i < sys.k(); ++i)
    acc += sys.polys[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
  return Residual{std::move(acc)};
}

Residual verify(const PolySystem& sys, const Certificate& cert) {
  return verify(sys, std::span<const Polynomial>(cert.g));
}

namespace {

// Complex integers for the box scan: plain cpp_int pairs, no rational
// normalization on the hot path.
struct GI {
  Int re;
  Int im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GI operator+(const GI& o) const { return {re + o.re, im + o.im}; }
  GI operator*(const GI& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

struct ITerm {
  Monomial mono;
  GI c;
};

struct IPoly {
  std::vector<ITerm> terms;
};

// f scaled by the lcm of its coefficient denominators: same zero set,
// integer coefficients.
IPoly clear_denominators(const Polynomial& f) {
  Int l = 1;
  for (const Term& t : f.terms()) {
    l = lcm(l, denominator(t.coeff.re()));
    l = lcm(l, denominator(t.coeff.im()));
  }
  IPoly out;
  out.terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Rational re = t.coeff.re() * l;
    Rational im = t.coeff.im() * l;
    out.terms.push_back({t.mono, {numerator(re), numerator(im)}});
  }
  return out;
}

// Substitute z_{var+1} = v, dropping that variable's exponent.
IPoly substitute(const IPoly& f, int var, const GI& v) {
  // Power table up to the largest exponent used.
  int maxe = 0;
  for (const ITerm& t : f.terms)
    maxe = std::max(maxe, t.mono.exps[static_cast<std::size_t>(var)]);
  std::vector<GI> pows;
  pows.reserve(static_cast<std::size_t>(maxe) + 1);
  pows.push_back({1, 0});
  for (int e = 1; e <= maxe; ++e) pows.push_back(pows.back() * v);

  std::map<std::vector<int>, GI> merged;
  for (const ITerm& t : f.terms) {
    std::vector<int> key = t.mono.exps;
    int e = key[static_cast<std::size_t>(var)];
    key[static_cast<std::size_t>(var)] = 0;
    GI contrib = t.c * pows[static_cast<std::size_t>(e)];
    auto [it, inserted] = merged.emplace(std::move(key), contrib);
    if (!inserted) it->second = it->second + contrib;
  }
  IPoly out;
  for (auto& [key, c] : merged) {
    if (c.is_zero()) continue;
    out.terms.push_back({Monomial(key), c});
  }
  return out;
}

GI evaluate_closed(const IPoly& f) {
  GI acc{0, 0};
  for (const ITerm& t : f.terms) acc = acc + t.c;
  return acc;
}

}  // namespace

std::optional<ZeroWitness> box_zero_search(const PolySystem& sys, int radius,
                                           const BoxOptions& opts) {
  if (radius < 0) throw DomainError("box radius must be non-negative");
  int side = 2 * radius + 1;
  Int points = 1;
  for (int j = 0; j < 2 * sys.n; ++j) points *= side;
  if (points > opts.max_points) {
    throw Refusal("box holds " + points.str() + " points, above the limit of " +
                  std::to_string(opts.max_points));
  }

  // Candidate values for one coordinate, Re ascending then Im ascending.
  std::vector<GI> candidates;
  candidates.reserve(static_cast<std::size_t>(side) * side);
  for (int re = -radius; re <= radius; ++re)
    for (int im = -radius; im <= radius; ++im)
      candidates.push_back({re, im});

  std::vector<IPoly> base;
  base.reserve(static_cast<std::size_t>(sys.k()));
  for (const Polynomial& f : sys.polys) base.push_back(clear_denominators(f));

  // levels[j] holds the system with z1..zj substituted; z1 is the
  // outermost (slowest) coordinate.
  std::vector<std::vector<IPoly>> levels(static_cast<std::size_t>(sys.n) + 1);
  levels[0] = std::move(base);
  std::vector<std::size_t> idx(static_cast<std::size_t>(sys.n), 0);

  auto recompute_from = [&](int j) {
    for (int v = j; v < sys.n; ++v) {
      auto& next = levels[static_cast<std::size_t>(v) + 1];
      next.clear();
      for (const IPoly& f : levels[static_cast<std::size_t>(v)])
        next.push_back(substitute(f, v, candidates[idx[static_cast<std::size_t>(v)]]));
    }
  };

  recompute_from(0);
  for (;;) {
    bool all_zero = true;
    for (const IPoly& f : levels[static_cast<std::size_t>(sys.n)]) {
      if (!evaluate_closed(f).is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      ZeroWitness w;
      for (int j = 0; j < sys.n; ++j) {
        const GI& v = candidates[idx[static_cast<std::size_t>(j)]];
        w.point.push_back(GaussianRational(Rational(v.re), Rational(v.im)));
      }
      for (const Polynomial& f : sys.polys) {
        GaussianRational val = f.evaluate(w.point);
        if (!val.is_zero())
          throw std::logic_error("box search invariant violated: witness does not re-evaluate to zero");
        w.values.push_back(val);
      }
      return w;
    }

    // Odometer step: the last coordinate moves fastest.
    int j = sys.n - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] + 1 == candidates.size()) {
      idx[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(j)];
    recompute_from(j);
  }
}

std::optional<Certificate> dense_cert_search(const PolySystem& sys,
                                             int max_degree,
                                             const DenseOptions& opts) {
  if (max_degree < 0) throw DomainError("dense search degree must be non-negative");

  int maxdeg = 0;
  for (const Polynomial& f : sys.polys)
    maxdeg = std::max(maxdeg, f.total_degree().value_or(0));

  std::vector<Monomial> basis = monomials_up_to_degree(sys.n, max_degree);
  std::size_t b = basis.size();
  std::size_t cols = b * static_cast<std::size_t>(sys.k());
  Int row_count = count_monomials_up_to_degree(sys.n, max_degree + maxdeg);
  Int cells = row_count * (Int(cols) + 1);
  if (cells > opts.max_cells) {
    throw Refusal("dense system holds " + cells.str() +
                  " cells, above the limit of " + std::to_string(opts.max_cells));
  }
  std::size_t rows = static_cast<std::size_t>(row_count);

  // Dense matrix [A | rhs]; row index = natural-order rank - 1, which is
  // contiguous because the row set is every monomial up to the degree cap.
  std::vector<std::vector<GaussianRational>> a(
      rows, std::vector<GaussianRational>(cols + 1, GaussianRational(0)));
  for (int i = 0; i < sys.k(); ++i) {
    for (std::size_t bi = 0; bi < b; ++bi) {
      std::size_t c = static_cast<std::size_t>(i) * b + bi;
      for (const Term& t : sys.polys[static_cast<std::size_t>(i)].terms()) {
        Monomial mu = t.mono * basis[bi];
        std::size_t r = static_cast<std::size_t>(mono_rank(mu) - 1);
        a[r][c] += t.coeff;
      }
    }
  }
  a[0][cols] = GaussianRational(1);  // constant row: rhs 1

  // Textbook Gauss-Jordan, first non-zero row as pivot, column by column.
  std::vector<std::size_t> pivot_col;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
    std::size_t src = next_row;
    while (src < rows && a[src][c].is_zero()) ++src;
    if (src == rows) continue;
    std::swap(a[src], a[next_row]);
    GaussianRational lead = a[next_row][c];
    for (std::size_t cc = c; cc <= cols; ++cc) a[next_row][cc] /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row || a[r][c].is_zero()) continue;
      GaussianRational factor = a[r][c];
      for (std::size_t cc = c; cc <= cols; ++cc)
        a[r][cc] -= factor * a[next_row][cc];
    }
    pivot_col.push_back(c);
    ++next_row;
  }

  for (std::size_t r = next_row; r < rows; ++r) {
    if (!a[r][cols].is_zero()) return std::nullopt;  // 0 = nonzero
  }

  std::vector<GaussianRational> values(cols, GaussianRational(0));
  for (std::size_t p = 0; p < pivot_col.size(); ++p) values[pivot_col[p]] = a[p][cols];

  Certificate cert;
  cert.strategy = "dense-oracle";
  cert.ansatz.request = AnsatzRequest::total_degree(max_degree);
  cert.ansatz.bases.assign(static_cast<std::size_t>(sys.k()), basis);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      int i = static_cast<int>(c / b);
      cert.zeroed_params.push_back("b" + std::to_string(i + 1) + "_" +
                                   mono_rank(basis[c % b]).str());
    }
  }
  for (int i = 0; i < sys.k(); ++i) {
    std::vector<Term> terms;
    for (std::size_t bi = 0; bi < b; ++bi)
      terms.push_back({values[static_cast<std::size_t>(i) * b + bi], basis[bi]});
    cert.g.push_back(Polynomial::from_terms(sys.n, std::move(terms)));
  }

  if (!verify(sys, cert).is_zero())
    throw std::logic_error("dense search invariant violated: certificate failed verification");
  return cert;
}

}  // namespace nullcert
