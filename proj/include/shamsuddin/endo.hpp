#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shamsuddin/derivation.hpp"
#include "shamsuddin/multipoly.hpp"
#include "shamsuddin/qmatrix.hpp"

namespace shamsuddin {

/// K-algebra endomorphism of K[x, y1, ..., yn], given by the images of the generators.
class PolyEndo {
 public:
  /// Throws std::invalid_argument unless every image has arity y_images.size().
  PolyEndo(MultiPoly x_image, std::vector<MultiPoly> y_images);

  static PolyEndo identity(std::size_t arity);

  std::size_t arity() const { return y_images_.size(); }
  const MultiPoly& x_image() const { return x_image_; }
  const std::vector<MultiPoly>& y_images() const { return y_images_; }
  /// Image of variable `var` (0 = x, j = y_j).
  const MultiPoly& image(std::size_t var) const { return var == 0 ? x_image_ : y_images_.at(var - 1); }

  bool is_identity() const;

  friend bool operator==(const PolyEndo&, const PolyEndo&) = default;

 private:
  MultiPoly x_image_;
  std::vector<MultiPoly> y_images_;
};

/// f(rho(x), rho(y1), ..., rho(yn)).
MultiPoly endo_apply(const PolyEndo& rho, const MultiPoly& f);

/// The endomorphism v -> outer(inner(v)).
PolyEndo compose(const PolyEndo& outer, const PolyEndo& inner);

/// D(rho(v)) == rho(D(v)) for every generator v.
bool commutes(const PolyEndo& rho, const Derivation& d);
bool commutes(const PolyEndo& rho, const TriangularDerivation& d);

/// x -> x + shift, y_t -> sum_j linear(t, j) y_j + offsets[t](x).
struct AffineEndo {
  Rational shift;
  QMatrix linear;
  std::vector<UniPoly> offsets;

  static AffineEndo identity(std::size_t arity);
};

/// det(linear) != 0; such maps are automorphisms with affine inverses.
bool affine_is_automorphism(const AffineEndo& rho);
PolyEndo affine_to_endo(const AffineEndo& rho);
/// x -> x - shift, y -> linear^{-1} (y - offsets(x - shift)); nullopt when singular.
std::optional<AffineEndo> affine_inverse(const AffineEndo& rho);

}  // namespace shamsuddin
