#pragma once

// Random generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the library's linear algebra.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/endo.hpp"
#include "shamsuddin/multipoly.hpp"
#include "shamsuddin/qmatrix.hpp"
#include "shamsuddin/unipoly.hpp"

namespace shamsuddin::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long lo, long hi, long max_den = 1) {
    return Rational(mpz_class(integer(lo, hi)), mpz_class(integer(1, max_den)));
  }

  /// Degree <= max_deg, coefficients in [lo, hi]; may be zero.
  UniPoly unipoly(int max_deg, long lo = -3, long hi = 3, long max_den = 1) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(integer(-1, max_deg));
    for (int k = 0; k <= deg; ++k) c.push_back(rational(lo, hi, max_den));
    return UniPoly::from_coefficients(c);
  }

  /// Up to `terms` random terms with total degree <= max_deg.
  MultiPoly multipoly(std::size_t arity, int max_deg, int terms, long lo = -3, long hi = 3, long max_den = 1) {
    MultiPoly p(arity);
    const int count = static_cast<int>(integer(0, terms));
    for (int t = 0; t < count; ++t) {
      Exponent e(arity + 1, 0);
      int budget = static_cast<int>(integer(0, max_deg));
      while (budget-- > 0) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(arity)))];
      p.add_term(e, rational(lo, hi, max_den));
    }
    return p;
  }

  /// Shamsuddin derivation with n y-variables; a's drawn from a small pool so
  /// that blocks with several variables occur.
  Derivation shamsuddin(std::size_t n, int max_deg_a, int max_deg_b, long lo = -3, long hi = 3) {
    const std::size_t pool_size = static_cast<std::size_t>(integer(1, static_cast<long>(n)));
    std::vector<UniPoly> pool;
    for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(special_or_random(max_deg_a, lo, hi));
    std::vector<VariableCoefficients> raw;
    for (std::size_t j = 0; j < n; ++j) {
      UniPoly a = pool[static_cast<std::size_t>(integer(0, static_cast<long>(pool_size) - 1))];
      UniPoly b = chance(0.1) ? UniPoly() : unipoly(max_deg_b, lo, hi);
      raw.push_back({std::move(a), MultiPoly::from_uni(n, b)});
    }
    return normalize(raw);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  UniPoly special_or_random(int max_deg, long lo, long hi) {
    const long pick = integer(0, 9);
    if (pick == 0) return UniPoly();
    if (pick == 1) return UniPoly(Rational(integer(1, 3)) * Rational(chance(0.5) ? 1 : -1));
    return unipoly(max_deg, lo, hi);
  }

  std::mt19937_64 rng_;
};

/// Plain rational Gauss-Jordan nullspace, kept separate from the library's
/// Bareiss route.
inline std::vector<QVector> oracle_nullspace(std::vector<QVector> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = m[r][c].inverse();
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank by the same Gauss-Jordan oracle.
inline std::size_t oracle_rank(const std::vector<QVector>& m, std::size_t cols) {
  return cols - oracle_nullspace(m, cols).size();
}

/// All polynomial z of degree <= max_deg with z' = a z + c, by coefficient
/// comparison through UniPoly arithmetic. Returns (particular, homogeneous basis).
struct OracleOde {
  std::optional<UniPoly> particular;
  std::vector<UniPoly> homogeneous;
};

inline OracleOde oracle_linear_ode(const UniPoly& a, const UniPoly& c, int max_deg) {
  // Unknowns z_0..z_max_deg plus a trailing column for -c (homogenised).
  const std::size_t nz = static_cast<std::size_t>(max_deg + 1);
  std::vector<UniPoly> residual_cols;
  for (std::size_t i = 0; i < nz; ++i) {
    const UniPoly zi = UniPoly::monomial(1, i);
    residual_cols.push_back(zi.derivative() - a * zi);
  }
  residual_cols.push_back(-c);
  int top = 0;
  for (const auto& col : residual_cols) top = std::max(top, col.degree());
  std::vector<QVector> m(static_cast<std::size_t>(top + 1), QVector(nz + 1));
  for (std::size_t j = 0; j < residual_cols.size(); ++j) {
    for (int p = 0; p <= top; ++p) m[static_cast<std::size_t>(p)][j] = residual_cols[j].coeff(static_cast<std::size_t>(p));
  }
  OracleOde out;
  for (const auto& v : oracle_nullspace(m, nz + 1)) {
    const UniPoly z = UniPoly::from_coefficients(QVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nz)));
    if (v[nz].is_zero()) {
      out.homogeneous.push_back(z);
    } else if (!out.particular) {
      out.particular = z * v[nz].inverse();
    }
  }
  return out;
}

inline bool all_integers_nonneg_nonzero(const std::vector<mpz_class>& g) {
  bool nonzero = false;
  for (const auto& v : g) {
    if (v < 0) return false;
    nonzero = nonzero || v != 0;
  }
  return nonzero;
}

}  // namespace shamsuddin::testing

#include <ostream>

#include "shamsuddin/textio.hpp"

namespace shamsuddin {

// Readable gtest failure messages.
inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << format_poly(p); }
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << format_unipoly(p); }
inline void PrintTo(const PolyEndo& p, std::ostream* os) { *os << format_endo(p); }
inline void PrintTo(const Rational& q, std::ostream* os) { *os << q; }

}  // namespace shamsuddin
