#include "shamsuddin/ode.hpp"

#include <algorithm>
#include <stdexcept>

namespace shamsuddin {

std::optional<std::size_t> degree_bound(const UniPoly& a, std::span<const UniPoly> cs) {
  int m = UniPoly::kZeroDegree;
  for (const auto& c : cs) m = std::max(m, c.degree());
  const int da = a.degree();
  if (da == UniPoly::kZeroDegree) return static_cast<std::size_t>(m + 1);
  if (m == UniPoly::kZeroDegree) return std::nullopt;
  const int bound = m - da;
  if (bound < 0) return std::nullopt;
  return static_cast<std::size_t>(bound);
}

QMatrix ode_residual_matrix(const UniPoly& a, std::span<const UniPoly> cs, std::optional<std::size_t> bound) {
  std::vector<UniPoly> columns;
  for (const auto& c : cs) columns.push_back(-c);
  if (bound) {
    for (std::size_t i = 0; i <= *bound; ++i) {
      UniPoly zi = UniPoly::monomial(1, i);
      columns.push_back(zi.derivative() - a * zi);
    }
  }
  int top = 0;
  for (const auto& col : columns) top = std::max(top, col.degree());
  QMatrix m(static_cast<std::size_t>(top + 1), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [p, c] : columns[j].terms()) m(p, j) = c;
  }
  return m;
}

namespace {

UniPoly z_from(std::span<const Rational> coeffs) {
  return UniPoly::from_coefficients(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

}  // namespace

OdeSolutions solve_linear_ode(const UniPoly& a, const UniPoly& c) {
  OdeSolutions out;
  out.homogeneous_dim = a.is_zero() ? 1 : 0;
  const UniPoly cs[] = {c};
  const auto bound = degree_bound(a, cs);
  if (!bound) {
    if (c.is_zero()) out.particular = UniPoly();
    return out;
  }
  QMatrix m = ode_residual_matrix(a, {}, bound);
  QVector rhs(m.rows());
  for (const auto& [p, coef] : c.terms()) {
    if (p >= rhs.size()) return out;  // c outruns every candidate z' - a z
    rhs[p] = coef;
  }
  auto sol = mat_solve_affine(m, rhs);
  if (!sol) return out;
  if (sol->basis.size() != out.homogeneous_dim) {
    throw std::logic_error("homogeneous solution count disagrees with z' = a z");
  }
  out.particular = z_from(sol->particular);
  return out;
}

ParamSolutionSpace solve_parametric(const UniPoly& a, std::span<const UniPoly> bs) {
  if (bs.empty()) throw std::invalid_argument("solve_parametric needs at least one b");
  ParamSolutionSpace out;
  out.r = bs.size();
  out.z_degree_bound = degree_bound(a, bs);
  const QMatrix m = ode_residual_matrix(a, bs, out.z_degree_bound);
  for (const auto& v : nullspace(m)) {
    ParamSolution s;
    s.k.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(out.r));
    s.z = z_from(std::span<const Rational>(v).subspan(out.r));
    out.basis.push_back(std::move(s));
  }
  return out;
}

std::optional<ParamSolution> has_nonzero_k_solution(const ParamSolutionSpace& space) {
  for (const auto& s : space.basis) {
    auto lead = std::find_if(s.k.begin(), s.k.end(), [](const Rational& c) { return !c.is_zero(); });
    if (lead == s.k.end()) continue;
    const Rational scale = lead->inverse();
    ParamSolution out = s;
    for (auto& c : out.k) c *= scale;
    out.z *= scale;
    return out;
  }
  return std::nullopt;
}

bool satisfies_parametric(const UniPoly& a, std::span<const UniPoly> bs, const ParamSolution& s) {
  if (s.k.size() != bs.size()) return false;
  UniPoly residual = s.z.derivative() - a * s.z;
  for (std::size_t j = 0; j < bs.size(); ++j) residual -= bs[j] * s.k[j];
  return residual.is_zero();
}

}  // namespace shamsuddin
