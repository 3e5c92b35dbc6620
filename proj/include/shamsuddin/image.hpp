#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/multipoly.hpp"

namespace shamsuddin {

/// Locally finite iff every a_j is constant.
bool is_locally_finite(const TriangularDerivation& d);

/// A nonzero gamma in N^n with sum_i gamma_i a_i = 0, or nullopt.
std::optional<std::vector<mpz_class>> nat_dependence_witness(std::span<const UniPoly> as);

enum class MzTag { kIsMz, kNotMz, kUnknown };

/// Which criterion produced the verdict.
enum class MzRule {
  kAllConstant,            // every a_i in K: locally finite and 1 in Im D
  kSingleBlockNonconstant, // one block with deg a >= 1
  kNoNaturalDependence,    // no gamma in N^n \ {0} with sum gamma_i a_i = 0, some deg a_i >= 1
  kNone,
};

struct MzVerdict {
  MzTag tag = MzTag::kUnknown;
  MzRule rule = MzRule::kNone;
  std::string reason;
  std::optional<std::vector<mpz_class>> gamma;  // per-variable, when one exists
};

/// Whether Im D is a Mathieu-Zhao subspace of K[x, y].
MzVerdict mz_classify(const Derivation& d);

const char* to_string(MzTag tag);

inline constexpr unsigned kDefaultPreimageXDegree = 8;
inline constexpr unsigned kDefaultPreimageYDegree = 4;

/// Some f with D(f) = g among polynomials of x-degree <= max_x_deg and
/// y-total-degree <= max_y_deg. nullopt only rules out that box.
std::optional<MultiPoly> preimage_bounded(const Derivation& d, const MultiPoly& g,
                                          unsigned max_x_deg = kDefaultPreimageXDegree,
                                          unsigned max_y_deg = kDefaultPreimageYDegree);

}  // namespace shamsuddin
