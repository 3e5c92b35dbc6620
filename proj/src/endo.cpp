#include "shamsuddin/endo.hpp"

#include <stdexcept>
#include <string>

namespace shamsuddin {

PolyEndo::PolyEndo(MultiPoly x_image, std::vector<MultiPoly> y_images)
    : x_image_(std::move(x_image)), y_images_(std::move(y_images)) {
  const std::size_t n = y_images_.size();
  if (x_image_.arity() != n) throw std::invalid_argument("image of x has the wrong arity");
  for (std::size_t j = 0; j < n; ++j) {
    if (y_images_[j].arity() != n) {
      throw std::invalid_argument("image of y" + std::to_string(j + 1) + " has the wrong arity");
    }
  }
}

PolyEndo PolyEndo::identity(std::size_t arity) {
  std::vector<MultiPoly> ys;
  ys.reserve(arity);
  for (std::size_t j = 1; j <= arity; ++j) ys.push_back(MultiPoly::variable(arity, j));
  return PolyEndo(MultiPoly::variable(arity, 0), std::move(ys));
}

bool PolyEndo::is_identity() const { return *this == identity(arity()); }

MultiPoly endo_apply(const PolyEndo& rho, const MultiPoly& f) {
  if (f.arity() != rho.arity()) throw std::invalid_argument("arity mismatch in endo_apply");
  const std::size_t nv = rho.arity() + 1;
  // powers[v][e] = rho(v)^e, filled on demand
  std::vector<std::vector<MultiPoly>> powers(nv);
  for (std::size_t v = 0; v < nv; ++v) powers[v].push_back(MultiPoly::constant(rho.arity(), 1));
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& ps = powers[v];
    while (ps.size() <= e) ps.push_back(ps.back() * rho.image(v));
    return ps[e];
  };
  MultiPoly out(rho.arity());
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(rho.arity(), c);
    for (std::size_t v = 0; v < nv; ++v) {
      if (e[v] != 0) t = t * power(v, e[v]);
    }
    out += t;
  }
  return out;
}

PolyEndo compose(const PolyEndo& outer, const PolyEndo& inner) {
  if (outer.arity() != inner.arity()) throw std::invalid_argument("arity mismatch in compose");
  std::vector<MultiPoly> ys;
  ys.reserve(inner.arity());
  for (const auto& g : inner.y_images()) ys.push_back(endo_apply(outer, g));
  return PolyEndo(endo_apply(outer, inner.x_image()), std::move(ys));
}

namespace {

template <typename D>
bool commutes_impl(const PolyEndo& rho, const D& d) {
  if (rho.arity() != d.arity()) throw std::invalid_argument("arity mismatch in commutes");
  // D(x) = 1 and rho(1) = 1.
  if (!(apply(d, rho.x_image()) == MultiPoly::constant(d.arity(), 1))) return false;
  for (std::size_t j = 1; j <= d.arity(); ++j) {
    if (!(apply(d, rho.image(j)) == endo_apply(rho, d.image_of_y(j)))) return false;
  }
  return true;
}

}  // namespace

bool commutes(const PolyEndo& rho, const Derivation& d) { return commutes_impl(rho, d); }
bool commutes(const PolyEndo& rho, const TriangularDerivation& d) { return commutes_impl(rho, d); }

AffineEndo AffineEndo::identity(std::size_t arity) {
  return AffineEndo{0, QMatrix::identity(arity), std::vector<UniPoly>(arity)};
}

bool affine_is_automorphism(const AffineEndo& rho) { return !determinant(rho.linear).is_zero(); }

PolyEndo affine_to_endo(const AffineEndo& rho) {
  const std::size_t r = rho.linear.rows();
  if (rho.linear.cols() != r || rho.offsets.size() != r) throw std::invalid_argument("affine endomorphism shape");
  std::vector<MultiPoly> ys;
  ys.reserve(r);
  for (std::size_t t = 0; t < r; ++t) {
    MultiPoly g = MultiPoly::from_uni(r, rho.offsets[t]);
    for (std::size_t j = 0; j < r; ++j) g += MultiPoly::variable(r, j + 1) * rho.linear(t, j);
    ys.push_back(std::move(g));
  }
  return PolyEndo(MultiPoly::variable(r, 0) + MultiPoly::constant(r, rho.shift), std::move(ys));
}

std::optional<AffineEndo> affine_inverse(const AffineEndo& rho) {
  auto inv = inverse(rho.linear);
  if (!inv) return std::nullopt;
  const std::size_t r = rho.linear.rows();
  std::vector<UniPoly> offsets(r);
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!(*inv)(t, j).is_zero()) offsets[t] -= poly_shift(rho.offsets[j], -rho.shift) * (*inv)(t, j);
    }
  }
  return AffineEndo{-rho.shift, std::move(*inv), std::move(offsets)};
}

}  // namespace shamsuddin
