#include "shamsuddin/derivation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace shamsuddin {

TriangularDerivation::TriangularDerivation(std::vector<VariableCoefficients> coefficients)
    : coefficients_(std::move(coefficients)) {
  const std::size_t n = coefficients_.size();
  for (std::size_t j = 1; j <= n; ++j) {
    const MultiPoly& b = coefficients_[j - 1].b;
    if (b.arity() != n) {
      throw std::invalid_argument("b_" + std::to_string(j) + " has arity " + std::to_string(b.arity()) +
                                  ", expected " + std::to_string(n));
    }
    for (std::size_t k = j; k <= n; ++k) {
      if (b.depends_on(k)) {
        throw std::invalid_argument("non-triangular dependency: b_" + std::to_string(j) + " involves y" +
                                    std::to_string(k));
      }
    }
  }
}

MultiPoly TriangularDerivation::image_of_y(std::size_t j) const {
  const auto& vc = coefficients_.at(j - 1);
  return MultiPoly::from_uni(arity(), vc.a) * MultiPoly::variable(arity(), j) + vc.b;
}

Derivation::Derivation(std::size_t arity, std::vector<Block> blocks)
    : arity_(arity), blocks_(std::move(blocks)), block_of_(arity), slot_of_(arity) {
  std::vector<bool> seen(arity, false);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& blk = blocks_[i];
    if (blk.bs.empty() || blk.bs.size() != blk.vars.size()) {
      throw std::invalid_argument("block " + std::to_string(i) + " must own as many variables as it has b's");
    }
    if (!std::is_sorted(blk.vars.begin(), blk.vars.end())) {
      throw std::invalid_argument("block variables must be ascending");
    }
    for (std::size_t s = 0; s < blk.vars.size(); ++s) {
      const std::size_t y = blk.vars[s];
      if (y == 0 || y > arity || seen[y - 1]) {
        throw std::invalid_argument("block variables must partition y1..y" + std::to_string(arity));
      }
      seen[y - 1] = true;
      block_of_[y - 1] = i;
      slot_of_[y - 1] = s;
    }
    for (std::size_t l = 0; l < i; ++l) {
      if (blocks_[l].a == blk.a) throw std::invalid_argument("blocks must have pairwise distinct a");
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("block variables must partition y1..y" + std::to_string(arity));
  }
}

const UniPoly& Derivation::a_of(std::size_t y) const { return blocks_[block_of(y)].a; }

const UniPoly& Derivation::b_of(std::size_t y) const { return blocks_[block_of(y)].bs[slot_of_[y - 1]]; }

std::vector<UniPoly> Derivation::a_per_variable() const {
  std::vector<UniPoly> out;
  out.reserve(arity_);
  for (std::size_t j = 1; j <= arity_; ++j) out.push_back(a_of(j));
  return out;
}

MultiPoly Derivation::image_of_y(std::size_t j) const {
  return MultiPoly::from_uni(arity_, a_of(j)) * MultiPoly::variable(arity_, j) + MultiPoly::from_uni(arity_, b_of(j));
}

TriangularDerivation Derivation::to_triangular() const {
  std::vector<VariableCoefficients> coeffs;
  coeffs.reserve(arity_);
  for (std::size_t j = 1; j <= arity_; ++j) coeffs.push_back({a_of(j), MultiPoly::from_uni(arity_, b_of(j))});
  return TriangularDerivation(std::move(coeffs));
}

Derivation Derivation::block_derivation(std::size_t block) const {
  const Block& blk = blocks_.at(block);
  return single_block(blk.a, blk.bs);
}

bool operator==(const Derivation& lhs, const Derivation& rhs) {
  if (lhs.arity_ != rhs.arity_ || lhs.blocks_.size() != rhs.blocks_.size()) return false;
  for (std::size_t i = 0; i < lhs.blocks_.size(); ++i) {
    const Block& l = lhs.blocks_[i];
    const Block& r = rhs.blocks_[i];
    if (!(l.a == r.a) || l.bs != r.bs || l.vars != r.vars) return false;
  }
  return true;
}

Derivation normalize(std::span<const VariableCoefficients> raw) {
  const std::size_t n = raw.size();
  std::vector<Block> blocks;
  for (std::size_t j = 1; j <= n; ++j) {
    auto b = raw[j - 1].b.as_univariate();
    if (!b) throw std::invalid_argument("b_" + std::to_string(j) + " is not a polynomial in x alone");
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& blk) { return blk.a == raw[j - 1].a; });
    if (it == blocks.end()) {
      blocks.push_back({raw[j - 1].a, {*b}, {j}});
    } else {
      it->bs.push_back(*b);
      it->vars.push_back(j);
    }
  }
  return Derivation(n, std::move(blocks));
}

Derivation normalize(const TriangularDerivation& raw) { return normalize(raw.coefficients()); }

Derivation single_block(const UniPoly& a, std::span<const UniPoly> bs) {
  if (bs.empty()) return Derivation(0, {});
  Block blk{a, std::vector<UniPoly>(bs.begin(), bs.end()), {}};
  for (std::size_t j = 1; j <= bs.size(); ++j) blk.vars.push_back(j);
  return Derivation(bs.size(), {std::move(blk)});
}

namespace {

template <typename D>
MultiPoly apply_impl(const D& d, const MultiPoly& f) {
  if (f.arity() != d.arity()) {
    throw std::invalid_argument("arity mismatch: derivation has " + std::to_string(d.arity()) +
                                " y-variables, polynomial has " + std::to_string(f.arity()));
  }
  MultiPoly out = poly_partial(f, 0);
  for (std::size_t j = 1; j <= d.arity(); ++j) {
    if (!f.depends_on(j)) continue;
    out += d.image_of_y(j) * poly_partial(f, j);
  }
  return out;
}

// Incremental rank over monomial coordinates: each stored row is reduced and
// keyed by its leading (largest) monomial.
class SparseRank {
 public:
  bool insert(MultiPoly v) {
    for (const auto& [lead, row] : rows_) {
      const Rational c = v.coeff(lead);
      if (!c.is_zero()) v -= row * c;
    }
    if (v.is_zero()) return false;
    const auto& [lead, c] = *v.terms().begin();
    Exponent key = lead;
    v *= c.inverse();
    for (auto& [other_lead, row] : rows_) {
      const Rational k = row.coeff(key);
      if (!k.is_zero()) row -= v * k;
    }
    rows_.emplace(std::move(key), std::move(v));
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<Exponent, MultiPoly, TermOrder> rows_;
};

template <typename D>
std::vector<std::size_t> span_dim_impl(const D& d, const MultiPoly& f, std::size_t kmax) {
  if (f.arity() != d.arity()) throw std::invalid_argument("arity mismatch in span_dim");
  std::vector<std::size_t> dims;
  dims.reserve(kmax + 1);
  SparseRank basis;
  MultiPoly current = f;
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > 0) current = apply_impl(d, current);
    basis.insert(current);
    dims.push_back(basis.size());
  }
  return dims;
}

}  // namespace

MultiPoly apply(const Derivation& d, const MultiPoly& f) { return apply_impl(d, f); }
MultiPoly apply(const TriangularDerivation& d, const MultiPoly& f) { return apply_impl(d, f); }

std::vector<std::size_t> span_dim(const Derivation& d, const MultiPoly& f, std::size_t kmax) {
  return span_dim_impl(d, f, kmax);
}

std::vector<std::size_t> span_dim(const TriangularDerivation& d, const MultiPoly& f, std::size_t kmax) {
  return span_dim_impl(d, f, kmax);
}

}  // namespace shamsuddin
