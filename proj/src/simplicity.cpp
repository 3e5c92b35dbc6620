#include "shamsuddin/simplicity.hpp"

#include <stdexcept>

namespace shamsuddin {

BlockSimplicity is_simple_block(const UniPoly& a, std::span<const UniPoly> bs) {
  BlockSimplicity out;
  out.witness = has_nonzero_k_solution(solve_parametric(a, bs));
  out.simple = !out.witness.has_value();
  if (out.witness && !satisfies_parametric(a, bs, *out.witness)) {
    throw std::logic_error("parametric ODE witness failed substitution");
  }
  return out;
}

SimplicityVerdict is_simple(const Derivation& d) {
  SimplicityVerdict out;
  for (const auto& blk : d.blocks()) {
    out.per_block.push_back(is_simple_block(blk.a, blk.bs));
    out.simple = out.simple && out.per_block.back().simple;
  }
  return out;
}

bool isotropy_is_trivial(const Derivation& d) { return is_simple(d).simple; }

}  // namespace shamsuddin
