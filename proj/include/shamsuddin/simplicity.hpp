#pragma once

#include <optional>
#include <span>
#include <vector>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/ode.hpp"

namespace shamsuddin {

struct BlockSimplicity {
  bool simple = true;
  /// (k, z) with k != 0 solving z' = a z + sum k_j b_j; present iff not simple.
  std::optional<ParamSolution> witness;
};

/// The block d/dx + sum_j (a y_j + b_j) d/dy_j is simple iff no polynomial z
/// solves z' = a z + sum k_j b_j for a nonzero k.
BlockSimplicity is_simple_block(const UniPoly& a, std::span<const UniPoly> bs);

struct SimplicityVerdict {
  bool simple = true;
  std::vector<BlockSimplicity> per_block;  // indexed by block id
};

/// Simple iff every block is simple.
SimplicityVerdict is_simple(const Derivation& d);

/// Aut(R)_D = {id} exactly when D is simple; witnesses for the converse come
/// from isotropy_witness.
bool isotropy_is_trivial(const Derivation& d);

}  // namespace shamsuddin
