#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "shamsuddin/rational.hpp"
#include "shamsuddin/unipoly.hpp"

namespace shamsuddin {

/// Exponent vector over (x, y1, ..., yn); index 0 is x, index j is y_j.
using Exponent = std::vector<unsigned>;

/// Canonical term order: lexicographic on (y1, ..., yn, x), largest first.
///
/// This reads a polynomial as an element of K[x][y1, ..., yn]: terms are
/// grouped by their y-monomial, and within a group by descending x-degree.
struct TermOrder {
  bool operator()(const Exponent& lhs, const Exponent& rhs) const;
};

/// Sparse polynomial in x, y1, ..., yn over Q with a fixed number n of
/// y-variables (the arity). Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, TermOrder>;

  explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Rational& c);
  /// The variable with index `var` (0 = x, j = y_j).
  static MultiPoly variable(std::size_t arity, std::size_t var);
  static MultiPoly term(std::size_t arity, Exponent exponent, const Rational& c);
  static MultiPoly from_uni(std::size_t arity, const UniPoly& p);

  std::size_t arity() const { return arity_; }
  std::size_t num_vars() const { return arity_ + 1; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent& exponent) const;

  /// Total degree in all variables; -1 for the zero polynomial.
  int total_degree() const;
  /// Total degree in y1..yn only; -1 for the zero polynomial.
  int y_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  /// The polynomial as an element of K[x] if no y-variable occurs.
  std::optional<UniPoly> as_univariate() const;
  /// Sum of the terms whose y-degree equals `d`.
  MultiPoly homogeneous_part(unsigned d) const;

  /// Re-embed into a ring with `new_arity` y-variables: y_j becomes
  /// y_{target[j - 1]}. x stays x.
  MultiPoly rename(std::size_t new_arity, const std::vector<std::size_t>& target) const;

  MultiPoly pow(unsigned e) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Accumulate c * monomial. Exposed for builders; keeps the no-zero invariant.
  void add_term(const Exponent& exponent, const Rational& c);

 private:
  void require_same_arity(const MultiPoly& other) const;

  std::size_t arity_;
  TermMap terms_;
};

/// Formal partial derivative with respect to variable `var` (0 = x).
MultiPoly poly_partial(const MultiPoly& f, std::size_t var);

}  // namespace shamsuddin
