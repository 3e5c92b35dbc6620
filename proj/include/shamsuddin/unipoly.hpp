#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "shamsuddin/rational.hpp"

namespace shamsuddin {

/// Univariate polynomial in x over Q, stored sparsely by degree.
///
/// No zero coefficient is ever stored, so the zero polynomial is the empty
/// map and its degree is `kZeroDegree` (standing in for -infinity).
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  UniPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  UniPoly(T constant) : UniPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  /// c * x^k
  static UniPoly monomial(const Rational& c, std::size_t k);
  static UniPoly x() { return monomial(1, 1); }
  /// Coefficients listed from the constant term upwards.
  static UniPoly from_coefficients(const std::vector<Rational>& low_to_high);

  const std::map<std::size_t, Rational>& terms() const { return terms_; }

  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const { return degree() <= 0; }
  Rational coeff(std::size_t k) const;
  Rational leading_coefficient() const;

  UniPoly derivative() const;
  Rational evaluate(const Rational& at) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& scalar);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const Rational& lhs, UniPoly rhs) { return rhs *= lhs; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void add_term(std::size_t k, const Rational& c);

  std::map<std::size_t, Rational> terms_;
};

/// b(x + c), expanded with binomial coefficients.
UniPoly poly_shift(const UniPoly& b, const Rational& c);

/// The antiderivative of b with zero constant term.
UniPoly poly_integrate(const UniPoly& b);

}  // namespace shamsuddin
