#include "shamsuddin/image.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "shamsuddin/qmatrix.hpp"

namespace shamsuddin {

bool is_locally_finite(const TriangularDerivation& d) {
  return std::all_of(d.coefficients().begin(), d.coefficients().end(),
                     [](const VariableCoefficients& vc) { return vc.a.is_constant(); });
}

std::optional<std::vector<mpz_class>> nat_dependence_witness(std::span<const UniPoly> as) {
  int top = 0;
  for (const auto& a : as) top = std::max(top, a.degree());
  QMatrix m(static_cast<std::size_t>(top + 1), as.size());
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (const auto& [p, c] : as[i].terms()) m(p, i) = c;
  }
  return nonneg_kernel_witness(m);
}

const char* to_string(MzTag tag) {
  switch (tag) {
    case MzTag::kIsMz:
      return "IS_MZ";
    case MzTag::kNotMz:
      return "NOT_MZ";
    case MzTag::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

MzVerdict mz_classify(const Derivation& d) {
  MzVerdict out;
  const auto& blocks = d.blocks();
  const bool all_constant =
      std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.a.is_constant(); });
  if (all_constant) {
    out.tag = MzTag::kIsMz;
    out.rule = MzRule::kAllConstant;
    out.reason = blocks.size() <= 1 ? "a in K" : "all a_i in K: D locally finite and 1 in Im D";
    return out;
  }
  const std::vector<UniPoly> as = d.a_per_variable();
  out.gamma = nat_dependence_witness(as);
  if (blocks.size() == 1) {
    out.tag = MzTag::kNotMz;
    out.rule = MzRule::kSingleBlockNonconstant;
    out.reason = "deg a >= 1";
    return out;
  }
  if (!out.gamma) {
    // Not all constant, so some deg a_i >= 1.
    out.tag = MzTag::kNotMz;
    out.rule = MzRule::kNoNaturalDependence;
    out.reason = "no nonzero gamma in N^n with sum gamma_i a_i = 0, and some deg a_i >= 1";
    return out;
  }
  out.tag = MzTag::kUnknown;
  out.rule = MzRule::kNone;
  out.reason = "outside the available criteria";
  return out;
}

std::optional<MultiPoly> preimage_bounded(const Derivation& d, const MultiPoly& g, unsigned max_x_deg,
                                          unsigned max_y_deg) {
  const std::size_t n = d.arity();
  if (g.arity() != n) throw std::invalid_argument("arity mismatch in preimage_bounded");

  // Unknowns: coefficients of every monomial x^i y^beta in the box.
  std::vector<Exponent> monomials;
  Exponent e(n + 1, 0);
  auto enumerate = [&](auto&& self, std::size_t var, unsigned y_left) -> void {
    if (var > n) {
      for (unsigned i = 0; i <= max_x_deg; ++i) {
        e[0] = i;
        monomials.push_back(e);
      }
      return;
    }
    for (unsigned k = 0; k <= y_left; ++k) {
      e[var] = k;
      self(self, var + 1, y_left - k);
    }
    e[var] = 0;
  };
  enumerate(enumerate, 1, max_y_deg);

  std::vector<MultiPoly> images;
  std::map<Exponent, std::size_t, TermOrder> row_of;
  for (const auto& t : g.terms()) row_of.emplace(t.first, row_of.size());
  for (const auto& mono : monomials) {
    images.push_back(apply(d, MultiPoly::term(n, mono, 1)));
    for (const auto& t : images.back().terms()) row_of.emplace(t.first, row_of.size());
  }
  QMatrix m(row_of.size(), monomials.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& [mono, c] : images[j].terms()) m(row_of.at(mono), j) = c;
  }
  QVector rhs(row_of.size());
  for (const auto& [mono, c] : g.terms()) rhs[row_of.at(mono)] = c;

  auto sol = mat_solve_affine(m, rhs);
  if (!sol) return std::nullopt;
  MultiPoly f(n);
  for (std::size_t j = 0; j < monomials.size(); ++j) f.add_term(monomials[j], sol->particular[j]);
  if (!(apply(d, f) == g)) throw std::logic_error("bounded preimage failed verification");
  return f;
}

}  // namespace shamsuddin
