#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shamsuddin/multipoly.hpp"
#include "shamsuddin/unipoly.hpp"

namespace shamsuddin {

/// D(y_j) = a * y_j + b for one variable y_j.
struct VariableCoefficients {
  UniPoly a;
  MultiPoly b;
};

/// D = d/dx + sum_j (a_j(x) y_j + b_j(x, y_1, ..., y_{j-1})) d/dy_j.
class TriangularDerivation {
 public:
  /// Throws std::invalid_argument unless every b_j has arity n and involves
  /// only x, y_1, ..., y_{j-1}.
  explicit TriangularDerivation(std::vector<VariableCoefficients> coefficients);

  std::size_t arity() const { return coefficients_.size(); }
  const std::vector<VariableCoefficients>& coefficients() const { return coefficients_; }
  /// D(y_j) as a polynomial, j in 1..n.
  MultiPoly image_of_y(std::size_t j) const;

 private:
  std::vector<VariableCoefficients> coefficients_;
};

/// One group of y-variables sharing the coefficient a(x).
struct Block {
  UniPoly a;
  std::vector<UniPoly> bs;          // b for each owned variable, in order of `vars`
  std::vector<std::size_t> vars;    // owned y-indices (1-based), ascending
};

/// A Shamsuddin derivation in normal form:
/// D = d/dx + sum_i sum_j (a_i(x) y_{i,j} + b_{i,j}(x)) d/dy_{i,j}, a_i pairwise distinct.
class Derivation {
 public:
  /// Validates the normal-form invariants; throws std::invalid_argument.
  Derivation(std::size_t arity, std::vector<Block> blocks);

  std::size_t arity() const { return arity_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t y) const { return block_of_[y - 1]; }
  const UniPoly& a_of(std::size_t y) const;
  const UniPoly& b_of(std::size_t y) const;
  /// a_j for j = 1..n, one entry per variable.
  std::vector<UniPoly> a_per_variable() const;

  /// D(y_j) as a polynomial, j in 1..n.
  MultiPoly image_of_y(std::size_t j) const;
  TriangularDerivation to_triangular() const;
  /// The block's derivation on K[x, y_{i,1}, ..., y_{i,r_i}], variables renumbered 1..r_i.
  Derivation block_derivation(std::size_t block) const;

  friend bool operator==(const Derivation& lhs, const Derivation& rhs);

 private:
  std::size_t arity_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> slot_of_;
};

/// Group variables with equal a into blocks, in order of first appearance.
/// Throws std::invalid_argument if some b is not a polynomial in x alone.
Derivation normalize(std::span<const VariableCoefficients> raw);
Derivation normalize(const TriangularDerivation& raw);

/// A single block derivation d/dx + sum_j (a y_j + b_j) d/dy_j; d/dx alone when `bs` is empty.
Derivation single_block(const UniPoly& a, std::span<const UniPoly> bs);

/// D(f) = f_x + sum_j D(y_j) f_{y_j}. Throws std::invalid_argument on arity mismatch.
MultiPoly apply(const Derivation& d, const MultiPoly& f);
MultiPoly apply(const TriangularDerivation& d, const MultiPoly& f);

/// dim span{f, D f, ..., D^k f} for k = 0..kmax.
std::vector<std::size_t> span_dim(const Derivation& d, const MultiPoly& f, std::size_t kmax);
std::vector<std::size_t> span_dim(const TriangularDerivation& d, const MultiPoly& f, std::size_t kmax);

}  // namespace shamsuddin
