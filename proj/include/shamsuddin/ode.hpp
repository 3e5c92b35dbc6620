#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "shamsuddin/qmatrix.hpp"
#include "shamsuddin/unipoly.hpp"

namespace shamsuddin {

/// Upper bound on deg z for any polynomial solution of z' = a z + sum k_j c_j.
///
/// nullopt means no nonzero polynomial z can solve any member of the family.
/// deg a >= 1: max deg c - deg a; a in K*: max deg c; a = 0: max deg c + 1.
std::optional<std::size_t> degree_bound(const UniPoly& a, std::span<const UniPoly> cs);

/// Polynomial solutions of z' = a z + c: particular + (constants if a = 0).
struct OdeSolutions {
  std::optional<UniPoly> particular;
  std::size_t homogeneous_dim = 0;
};

OdeSolutions solve_linear_ode(const UniPoly& a, const UniPoly& c);

/// A pair (k, z) with z' = a z + sum_j k_j b_j.
struct ParamSolution {
  QVector k;
  UniPoly z;
};

/// The linear space of all (k, z) with z' = a z + sum_j k_j b_j and z in K[x].
struct ParamSolutionSpace {
  std::size_t r = 0;
  std::optional<std::size_t> z_degree_bound;
  std::vector<ParamSolution> basis;

  /// r + number of z coefficients.
  std::size_t ambient_dim() const { return r + (z_degree_bound ? *z_degree_bound + 1 : 0); }
};

/// Solves for k and the coefficients of z jointly in one homogeneous system.
/// Throws std::invalid_argument if bs is empty.
ParamSolutionSpace solve_parametric(const UniPoly& a, std::span<const UniPoly> bs);

/// A solution with k != 0, scaled so its first nonzero k-entry is 1.
std::optional<ParamSolution> has_nonzero_k_solution(const ParamSolutionSpace& space);

/// Coefficient matrix of (k, z) -> z' - a z - sum_j k_j c_j.
///
/// Columns are k_1..k_r (holding -c_j) followed by z_0..z_bound; rows are the
/// powers of x. With no bound, only the k columns are present.
QMatrix ode_residual_matrix(const UniPoly& a, std::span<const UniPoly> cs, std::optional<std::size_t> z_bound);

/// z' - a z - sum_j k_j b_j == 0 exactly.
bool satisfies_parametric(const UniPoly& a, std::span<const UniPoly> bs, const ParamSolution& s);

}  // namespace shamsuddin
