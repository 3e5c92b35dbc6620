#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/endo.hpp"
#include "shamsuddin/qmatrix.hpp"

namespace shamsuddin {

/// Scale parameter of the (1 - e) witness construction.
inline constexpr long kWitnessScale = 2;

/// A non-identity automorphism commuting with one block of D, acting on that
/// block's variables only (renumbered 1..r_i).
struct BlockWitness {
  std::size_t block = 0;
  AffineEndo local;
};

/// For a non-simple D: the first non-simple block and an affine witness on it.
///
/// Uses the scaling y_j -> 2 y_j when some b_j = 0; the shifted family
/// y_t -> 2 y_t - h_t(x), h_t = integral of b_t, when a = 0; otherwise
/// y_p -> (1 - e) y_p - e sum_{j != p} k_j y_j + e Q(x) with e = 2 and (k, Q)
/// the ODE witness normalised so that k_p = 1 is its first nonzero entry.
std::optional<BlockWitness> block_witness(const Derivation& d);

/// Extend an automorphism of the block ring by the identity on every other
/// block. Throws std::invalid_argument unless block_endo fixes x and
/// commutes with the block derivation.
PolyEndo embed_block_endo(const Derivation& d, std::size_t block, const PolyEndo& block_endo);
AffineEndo embed_block_affine(const Derivation& d, std::size_t block, const AffineEndo& block_endo);

/// A verified rho != id in Aut(R)_D, or nullopt when D is simple.
std::optional<PolyEndo> isotropy_witness(const Derivation& d);
/// The same witness in affine form (always affine with det != 0).
std::optional<AffineEndo> isotropy_witness_affine(const Derivation& d);

enum class IsotropyCase { kAZero, kAConstant, kADegreePositive };

/// Parametrisation of Aut(K[x, y_1..y_r])_D for a single block.
///
/// kADegreePositive: x -> x, y_t -> sum_j c_tj y_j + g_t(x) where row t lies in
///   rows[t], an affine space over (c_t1..c_tr, coefficients of g_t up to
///   g_degree_bound), and det(c) != 0.
/// kAConstant: x -> x + c for any c; any invertible (c_tj); g_t is the unique
///   polynomial solution of g' = a g + b_t(x + c) - sum_j c_tj b_j
///   (see constant_case_offsets).
/// kAZero: x -> x + p(Y), y_t -> h_t(x + p(Y)) + q_t(Y) with Y_j = y_j - h_j(x),
///   h_t = integral of b_t, p free and q an automorphism of K[Y]
///   (see zero_case_member).
struct IsotropyDescription {
  IsotropyCase kind = IsotropyCase::kAZero;
  UniPoly a;
  std::vector<UniPoly> bs;
  bool shift_free = true;
  std::optional<std::size_t> g_degree_bound;
  std::vector<AffineSpace> rows;
  std::vector<UniPoly> antiderivatives;

  std::size_t r() const { return bs.size(); }
};

IsotropyDescription isotropy_describe_block(const UniPoly& a, std::span<const UniPoly> bs);

/// kAConstant only: the polynomial offsets g_t for a chosen shift and matrix.
std::vector<UniPoly> constant_case_offsets(const IsotropyDescription& desc, const Rational& shift,
                                           const QMatrix& linear);

/// kAZero only: the member for p(Y) and q(Y), given as polynomials of arity r
/// not involving x (variable j stands for Y_j).
PolyEndo zero_case_member(const IsotropyDescription& desc, const MultiPoly& p, const std::vector<MultiPoly>& q);

struct IsotropySample {
  PolyEndo endo;
  std::optional<AffineEndo> affine;  // present when the member is affine in y
};

/// Draw one member of the description (small integer parameters, singular
/// matrices rejected). Every returned member commutes with the block.
/// nullopt if every draw within the retry budget was singular.
std::optional<IsotropySample> sample_isotropy_element(const IsotropyDescription& desc, std::uint64_t seed);

}  // namespace shamsuddin
