#include <gtest/gtest.h>

#include "shamsuddin/endo.hpp"
#include "shamsuddin/textio.hpp"
#include "support.hpp"

namespace {

using shamsuddin::AffineEndo;
using shamsuddin::Derivation;
using shamsuddin::MultiPoly;
using shamsuddin::PolyEndo;
using shamsuddin::QMatrix;
using shamsuddin::Rational;
using shamsuddin::UniPoly;
using shamsuddin::testing::Gen;

MultiPoly P(const char* text, std::size_t n) { return shamsuddin::parse_poly(text, n); }
UniPoly U(const char* text) { return *shamsuddin::parse_poly(text, 0).as_univariate(); }
PolyEndo E(const char* text, std::size_t n) { return shamsuddin::parse_endo(text, n); }
Derivation D(const char* text) { return std::get<Derivation>(shamsuddin::parse_derivation(text)); }

AffineEndo random_affine(Gen& gen, std::size_t r) {
  AffineEndo rho{gen.rational(-2, 2), QMatrix(r, r), {}};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) rho.linear(i, j) = gen.rational(-2, 2);
    rho.offsets.push_back(gen.unipoly(2));
  }
  return rho;
}

TEST(Endo, ApplyExamples) {
  const MultiPoly f = P("x^2*y1 - 3*y1^2 + 1", 1);
  EXPECT_EQ(endo_apply(PolyEndo::identity(1), f), f);
  EXPECT_EQ(endo_apply(E("x -> x ; y1 -> 2*y1", 1), P("y1^2", 1)), P("4*y1^2", 1));
  EXPECT_EQ(endo_apply(E("x -> x ; y1 -> y1 - x", 1), P("x*y1", 1)), P("x*y1 - x^2", 1));
}

TEST(Endo, ValidatesArity) {
  EXPECT_THROW(PolyEndo(MultiPoly::variable(1, 0), {MultiPoly::variable(2, 1)}), std::invalid_argument);
}

TEST(Endo, CommutesExamples) {
  EXPECT_TRUE(commutes(PolyEndo::identity(1), D("y1: a=x, b=1")));
  EXPECT_TRUE(commutes(E("x -> x ; y1 -> 2*y1", 1), D("y1: a=1, b=0")));
  EXPECT_FALSE(commutes(E("x -> x ; y1 -> 2*y1", 1), D("y1: a=1, b=1")));
  EXPECT_TRUE(commutes(E("x -> x ; y1 -> -y1 - 2*x - 2", 1), D("y1: a=1, b=x")));
}

// commutes(rho, D) must agree with checking rho(D(f)) = D(rho(f)) on every
// generator, computed here by hand from endo_apply and apply.
TEST(Endo, CommutesMatchesGeneratorCheckProperty) {
  Gen gen(51);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    const Derivation d = gen.shamsuddin(n, 1, 1, -1, 1);
    std::vector<MultiPoly> ys;
    for (std::size_t j = 1; j <= n; ++j) {
      ys.push_back(gen.chance(0.5) ? Rational(gen.integer(1, 2)) * MultiPoly::variable(n, j) : gen.multipoly(n, 1, 2, -1, 1));
    }
    const PolyEndo rho(gen.chance(0.7) ? MultiPoly::variable(n, 0) : gen.multipoly(n, 1, 2), ys);
    bool expected = true;
    for (std::size_t v = 0; v <= n; ++v) {
      const MultiPoly gen_v = MultiPoly::variable(n, v);
      expected = expected && endo_apply(rho, apply(d, gen_v)) == apply(d, endo_apply(rho, gen_v));
    }
    EXPECT_EQ(commutes(rho, d), expected);
    EXPECT_EQ(commutes(rho, d.to_triangular()), expected);
    positives += expected;
  }
  EXPECT_GT(positives, 0);
}

TEST(Endo, ComposeIsSubstitution) {
  Gen gen(52);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2;
    auto random_endo = [&] {
      return PolyEndo(gen.multipoly(n, 2, 3), {gen.multipoly(n, 2, 3), gen.multipoly(n, 2, 3)});
    };
    const PolyEndo a = random_endo(), b = random_endo();
    const MultiPoly f = gen.multipoly(n, 2, 3);
    // compose(outer, inner) acts as outer after inner on variables: (outer . inner)(f) = outer(inner(f)).
    EXPECT_EQ(endo_apply(compose(a, b), f), endo_apply(a, endo_apply(b, f)));
  }
}

TEST(Endo, AffineExamples) {
  EXPECT_TRUE(affine_is_automorphism(AffineEndo::identity(2)));
  EXPECT_FALSE(affine_is_automorphism(AffineEndo{Rational(1), QMatrix{{1, 1}, {1, 1}}, {U("x^2"), U("0")}}));
  EXPECT_TRUE(affine_is_automorphism(AffineEndo{Rational(3), QMatrix{{1, -1}, {0, 1}}, {U("x^2"), U("0")}}));
  EXPECT_EQ(affine_to_endo(AffineEndo::identity(2)), PolyEndo::identity(2));
  EXPECT_EQ(affine_to_endo(AffineEndo{Rational(1), QMatrix{{1}}, {U("0")}}), E("x -> x + 1 ; y1 -> y1", 1));
  EXPECT_EQ(affine_to_endo(AffineEndo{Rational(0), QMatrix{{-1}}, {U("-x - 1")}}), E("x -> x ; y1 -> -y1 - x - 1", 1));
}

TEST(Endo, AffineInverseComposesToIdentityProperty) {
  Gen gen(53);
  int invertible = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = static_cast<std::size_t>(gen.integer(1, 3));
    const AffineEndo rho = random_affine(gen, r);
    const auto inv = affine_inverse(rho);
    ASSERT_EQ(inv.has_value(), affine_is_automorphism(rho));
    if (!inv) continue;
    ++invertible;
    const PolyEndo f = affine_to_endo(rho), g = affine_to_endo(*inv);
    EXPECT_TRUE(compose(f, g).is_identity());
    EXPECT_TRUE(compose(g, f).is_identity());
  }
  EXPECT_GT(invertible, 100);
}

}  // namespace
