#include "shamsuddin/qmatrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace shamsuddin {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector operator*(const QMatrix& a, std::span<const Rational> v) {
  if (v.size() != a.cols()) throw std::invalid_argument("matrix-vector dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// Integer image of a rational matrix: each row multiplied by the lcm of its
// denominators. Row scaling preserves row space, rank and pivots.
struct IntegerRows {
  std::vector<std::vector<mpz_class>> rows;
  mpz_class scale_product = 1;
};

IntegerRows to_integer_rows(const QMatrix& a) {
  IntegerRows out;
  out.rows.resize(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_class d = a(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.rows[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
    }
    out.scale_product *= l;
  }
  return out;
}

struct BareissResult {
  std::vector<std::vector<mpz_class>> rows;  // row echelon form
  std::vector<std::size_t> pivot_columns;
  int swap_sign = 1;
};

BareissResult bareiss(std::vector<std::vector<mpz_class>> m, std::size_t cols) {
  BareissResult out;
  const std::size_t rows = m.size();
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      out.swap_sign = -out.swap_sign;
    }
    const mpz_class& pivot = m[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = pivot * m[i][j] - m[i][col] * m[r][j];
        mpz_class rem;
        mpz_tdiv_qr(m[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        if (rem != 0) throw std::logic_error("Bareiss step produced an inexact quotient");
      }
      m[i][col] = 0;
    }
    previous = m[r][col];
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

}  // namespace

EchelonForm row_reduce(const QMatrix& a) {
  const std::size_t cols = a.cols();
  BareissResult fwd = bareiss(to_integer_rows(a).rows, cols);
  QMatrix reduced(a.rows(), cols);
  const std::size_t rnk = fwd.pivot_columns.size();
  for (std::size_t i = 0; i < rnk; ++i) {
    const Rational lead(fwd.rows[i][fwd.pivot_columns[i]], 1);
    for (std::size_t j = 0; j < cols; ++j) {
      if (fwd.rows[i][j] != 0) reduced(i, j) = Rational(fwd.rows[i][j], 1) / lead;
    }
  }
  for (std::size_t i = rnk; i-- > 0;) {
    const std::size_t pc = fwd.pivot_columns[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational factor = reduced(k, pc);
      if (factor.is_zero()) continue;
      for (std::size_t j = pc; j < cols; ++j) {
        if (!reduced(i, j).is_zero()) reduced(k, j) -= factor * reduced(i, j);
      }
    }
  }
  return {std::move(reduced), std::move(fwd.pivot_columns)};
}

std::size_t rank(const QMatrix& a) {
  return bareiss(to_integer_rows(a).rows, a.cols()).pivot_columns.size();
}

Rational determinant(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerRows ints = to_integer_rows(a);
  BareissResult fwd = bareiss(ints.rows, n);
  if (fwd.pivot_columns.size() < n) return 0;
  return Rational(fwd.rows[n - 1][n - 1] * fwd.swap_sign, ints.scale_product);
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  EchelonForm ef = row_reduce(aug);
  if (ef.pivot_columns.size() < n || ef.pivot_columns[n - 1] != n - 1) return std::nullopt;
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ef.reduced(i, n + j);
  }
  return out;
}

namespace {

std::vector<QVector> nullspace_from(const EchelonForm& ef, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : ef.pivot_columns) {
    if (pc < cols) is_pivot[pc] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) {
      const std::size_t pc = ef.pivot_columns[i];
      if (pc < cols) v[pc] = -ef.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<QVector> nullspace(const QMatrix& a) { return nullspace_from(row_reduce(a), a.cols()); }

std::optional<AffineSpace> mat_solve_affine(const QMatrix& a, std::span<const Rational> rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match row count");
  const std::size_t n = a.cols();
  QMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = rhs[i];
  }
  EchelonForm ef = row_reduce(aug);
  if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == n) return std::nullopt;
  AffineSpace out;
  out.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) out.particular[ef.pivot_columns[i]] = ef.reduced(i, n);
  out.basis = nullspace_from(ef, n);
  return out;
}

namespace {

// coeffs . t >= bound
struct Inequality {
  QVector coeffs;
  Rational bound;

  friend auto operator<=>(const Inequality& lhs, const Inequality& rhs) {
    if (auto c = std::lexicographical_compare_three_way(lhs.coeffs.begin(), lhs.coeffs.end(), rhs.coeffs.begin(),
                                                        rhs.coeffs.end());
        c != 0) {
      return c;
    }
    return lhs.bound <=> rhs.bound;
  }
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

// Scale so the first nonzero coefficient has absolute value one; identical
// half-spaces then compare equal and deduplicate.
Inequality normalized(Inequality ineq) {
  auto it = std::find_if(ineq.coeffs.begin(), ineq.coeffs.end(), [](const Rational& c) { return !c.is_zero(); });
  if (it == ineq.coeffs.end()) return ineq;
  const Rational s = it->abs().inverse();
  for (auto& c : ineq.coeffs) c *= s;
  ineq.bound *= s;
  return ineq;
}

using System = std::set<Inequality>;

// Returns nullopt once a variable-free inequality 0 >= bound with bound > 0 appears.
std::optional<System> eliminate(const System& sys, std::size_t var) {
  std::vector<const Inequality*> lower, upper;
  System out;
  for (const auto& ineq : sys) {
    const int s = ineq.coeffs[var].sign();
    if (s > 0) {
      lower.push_back(&ineq);
    } else if (s < 0) {
      upper.push_back(&ineq);
    } else {
      out.insert(ineq);
    }
  }
  for (const Inequality* lo : lower) {
    for (const Inequality* up : upper) {
      const Rational wl = -up->coeffs[var];
      const Rational wu = lo->coeffs[var];
      Inequality comb{QVector(lo->coeffs.size()), wl * lo->bound + wu * up->bound};
      for (std::size_t j = 0; j < comb.coeffs.size(); ++j) comb.coeffs[j] = wl * lo->coeffs[j] + wu * up->coeffs[j];
      comb.coeffs[var] = 0;
      out.insert(normalized(std::move(comb)));
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (std::all_of(it->coeffs.begin(), it->coeffs.end(), [](const Rational& c) { return c.is_zero(); })) {
      if (it->bound.sign() > 0) return std::nullopt;
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<mpz_class>> nonneg_kernel_witness(const QMatrix& a) {
  const std::vector<QVector> kernel = nullspace(a);
  const std::size_t n = a.cols();
  const std::size_t m = kernel.size();
  if (m == 0) return std::nullopt;

  // gamma = sum_j t_j kernel[j]; constraints gamma_i >= 0 and sum gamma = 1.
  System sys;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality ineq{QVector(m), 0};
    for (std::size_t j = 0; j < m; ++j) ineq.coeffs[j] = kernel[j][i];
    if (std::any_of(ineq.coeffs.begin(), ineq.coeffs.end(), [](const Rational& c) { return !c.is_zero(); })) {
      sys.insert(normalized(std::move(ineq)));
    }
  }
  Inequality sum_ge{QVector(m), 1};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) sum_ge.coeffs[j] += kernel[j][i];
  }
  if (std::all_of(sum_ge.coeffs.begin(), sum_ge.coeffs.end(), [](const Rational& c) { return c.is_zero(); })) {
    return std::nullopt;
  }
  Inequality sum_le{sum_ge.coeffs, -1};
  for (auto& c : sum_le.coeffs) c = -c;
  sys.insert(normalized(std::move(sum_ge)));
  sys.insert(normalized(std::move(sum_le)));

  std::vector<System> stages{sys};
  for (std::size_t var = 0; var < m; ++var) {
    auto next = eliminate(stages.back(), var);
    if (!next) return std::nullopt;
    stages.push_back(std::move(*next));
  }

  // Back substitution: stage `var` only involves variables var..m-1.
  QVector t(m);
  for (std::size_t var = m; var-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& ineq : stages[var]) {
      const Rational& c = ineq.coeffs[var];
      if (c.is_zero()) continue;
      Rational rest = ineq.bound;
      for (std::size_t j = var + 1; j < m; ++j) rest -= ineq.coeffs[j] * t[j];
      const Rational limit = rest / c;
      if (c.sign() > 0) {
        if (!lo || limit > *lo) lo = limit;
      } else {
        if (!hi || limit < *hi) hi = limit;
      }
    }
    if (lo && hi) {
      t[var] = (*lo + *hi) / Rational(2);
    } else if (lo) {
      t[var] = *lo;
    } else if (hi) {
      t[var] = *hi;
    } else {
      t[var] = 0;
    }
  }

  QVector gamma(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) gamma[i] += t[j] * kernel[j][i];
  }
  mpz_class l = 1;
  for (const auto& g : gamma) {
    if (g.sign() < 0) throw std::logic_error("Fourier-Motzkin back substitution left the nonnegative orthant");
    mpz_class d = g.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> out(n);
  mpz_class g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = gamma[i].numerator() * (l / gamma[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) throw std::logic_error("Fourier-Motzkin produced the zero vector");
  for (auto& v : out) v /= g;
  return out;
}

}  // namespace shamsuddin
