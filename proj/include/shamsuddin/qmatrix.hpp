#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "shamsuddin/rational.hpp"

namespace shamsuddin {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QVector operator*(const QMatrix& a, std::span<const Rational> v);
QMatrix operator*(const QMatrix& a, const QMatrix& b);

/// Solution set particular + span(basis) of an affine system.
struct AffineSpace {
  QVector particular;
  std::vector<QVector> basis;
};

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form, computed by fraction-free (Bareiss) forward
/// elimination over the integers followed by rational back substitution.
EchelonForm row_reduce(const QMatrix& a);

std::size_t rank(const QMatrix& a);
Rational determinant(const QMatrix& a);
std::optional<QMatrix> inverse(const QMatrix& a);

/// Basis of {v : A v = 0}, one vector per free column of the echelon form.
std::vector<QVector> nullspace(const QMatrix& a);

/// All solutions of A v = rhs, or nullopt when the system is inconsistent.
std::optional<AffineSpace> mat_solve_affine(const QMatrix& a, std::span<const Rational> rhs);

/// A nonzero vector of nonnegative integers in ker A, or nullopt if none exists.
///
/// Decides feasibility of {g in ker A, g >= 0, sum g = 1} by Fourier-Motzkin
/// elimination over nullspace coordinates, then clears denominators.
std::optional<std::vector<mpz_class>> nonneg_kernel_witness(const QMatrix& a);

}  // namespace shamsuddin
