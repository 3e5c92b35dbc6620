#include <gtest/gtest.h>

#include "shamsuddin/image.hpp"
#include "shamsuddin/textio.hpp"
#include "support.hpp"

namespace {

using shamsuddin::Derivation;
using shamsuddin::MultiPoly;
using shamsuddin::MzRule;
using shamsuddin::MzTag;
using shamsuddin::TriangularDerivation;
using shamsuddin::UniPoly;
using shamsuddin::testing::Gen;

UniPoly U(const char* text) { return *shamsuddin::parse_poly(text, 0).as_univariate(); }
MultiPoly P(const char* text, std::size_t n) { return shamsuddin::parse_poly(text, n); }
Derivation D(const char* text) { return std::get<Derivation>(shamsuddin::parse_derivation(text)); }
TriangularDerivation T(const char* text) {
  const auto parsed = shamsuddin::parse_derivation(text);
  if (const auto* tri = std::get_if<TriangularDerivation>(&parsed)) return *tri;
  return std::get<Derivation>(parsed).to_triangular();
}

TEST(Image, LocallyFiniteExamples) {
  EXPECT_TRUE(shamsuddin::is_locally_finite(T("y1: a=1, b=0 ; y2: a=2, b=y1^2")));
  EXPECT_FALSE(shamsuddin::is_locally_finite(T("y1: a=x, b=0")));
  EXPECT_TRUE(shamsuddin::is_locally_finite(TriangularDerivation({})));
}

TEST(Image, NatDependenceExamples) {
  EXPECT_FALSE(shamsuddin::nat_dependence_witness(std::vector<UniPoly>{U("x")}));
  const auto g = shamsuddin::nat_dependence_witness(std::vector<UniPoly>{U("x"), U("-x")});
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, (std::vector<mpz_class>{1, 1}));
  EXPECT_FALSE(shamsuddin::nat_dependence_witness(std::vector<UniPoly>{U("x"), U("x + 1")}));
  EXPECT_FALSE(shamsuddin::nat_dependence_witness(std::vector<UniPoly>{U("x"), U("x^2"), U("1")}));
}

TEST(Image, NonnegKernelSpecExamples) {
  EXPECT_FALSE(shamsuddin::nonneg_kernel_witness(shamsuddin::QMatrix{{1}}));
  EXPECT_EQ(*shamsuddin::nonneg_kernel_witness(shamsuddin::QMatrix{{1, -1}}), (std::vector<mpz_class>{1, 1}));
  EXPECT_FALSE(shamsuddin::nonneg_kernel_witness(shamsuddin::QMatrix{{1, 1}, {0, 1}}));
}

TEST(Image, MzExamples) {
  auto v = shamsuddin::mz_classify(D("y1: a=x, b=1"));
  EXPECT_EQ(v.tag, MzTag::kNotMz);
  EXPECT_EQ(v.rule, MzRule::kSingleBlockNonconstant);
  v = shamsuddin::mz_classify(D("y1: a=1, b=1"));
  EXPECT_EQ(v.tag, MzTag::kIsMz);
  EXPECT_EQ(v.rule, MzRule::kAllConstant);
  v = shamsuddin::mz_classify(D("y1: a=x, b=0 ; y2: a=-x, b=0"));
  EXPECT_EQ(v.tag, MzTag::kUnknown);
  ASSERT_TRUE(v.gamma);
  EXPECT_EQ(*v.gamma, (std::vector<mpz_class>{1, 1}));
  v = shamsuddin::mz_classify(D("y1: a=x, b=0 ; y2: a=x+1, b=1"));
  EXPECT_EQ(v.tag, MzTag::kNotMz);
  EXPECT_EQ(v.rule, MzRule::kNoNaturalDependence);
  EXPECT_STREQ(shamsuddin::to_string(MzTag::kIsMz), "IS_MZ");
  EXPECT_STREQ(shamsuddin::to_string(MzTag::kNotMz), "NOT_MZ");
  EXPECT_STREQ(shamsuddin::to_string(MzTag::kUnknown), "UNKNOWN");
}

// Rules are mutually exclusive and each verdict is backed by its premise.
TEST(Image, MzRulePremisesProperty) {
  Gen gen(91);
  for (int t = 0; t < 400; ++t) {
    const Derivation d = gen.shamsuddin(static_cast<std::size_t>(gen.integer(1, 4)), 2, 2);
    const auto v = shamsuddin::mz_classify(d);
    const auto as = d.a_per_variable();
    const bool all_const = std::all_of(as.begin(), as.end(), [](const UniPoly& a) { return a.is_constant(); });
    const auto gamma = shamsuddin::nat_dependence_witness(as);
    switch (v.rule) {
      case MzRule::kAllConstant:
        EXPECT_EQ(v.tag, MzTag::kIsMz);
        EXPECT_TRUE(all_const);
        break;
      case MzRule::kSingleBlockNonconstant:
        EXPECT_EQ(v.tag, MzTag::kNotMz);
        EXPECT_EQ(d.blocks().size(), 1u);
        EXPECT_FALSE(all_const);
        break;
      case MzRule::kNoNaturalDependence:
        EXPECT_EQ(v.tag, MzTag::kNotMz);
        EXPECT_FALSE(gamma);
        EXPECT_FALSE(all_const);
        break;
      case MzRule::kNone:
        EXPECT_EQ(v.tag, MzTag::kUnknown);
        EXPECT_FALSE(all_const);
        EXPECT_GT(d.blocks().size(), 1u);
        EXPECT_TRUE(gamma);
        break;
    }
    if (v.gamma) {
      ASSERT_EQ(v.gamma->size(), as.size());
      UniPoly sum;
      for (std::size_t i = 0; i < as.size(); ++i) sum += as[i] * shamsuddin::Rational((*v.gamma)[i], 1);
      EXPECT_TRUE(sum.is_zero());
      EXPECT_TRUE(shamsuddin::testing::all_integers_nonneg_nonzero(*v.gamma));
    }
  }
}

TEST(Image, PreimageExamples) {
  const auto dx = shamsuddin::single_block(UniPoly(), {});
  EXPECT_EQ(shamsuddin::preimage_bounded(dx, P("1", 0)), P("x", 0));
  EXPECT_EQ(shamsuddin::preimage_bounded(D("y1: a=1, b=1"), P("y1", 1)), P("y1 - x", 1));
  EXPECT_FALSE(shamsuddin::preimage_bounded(D("y1: a=x, b=1"), P("y1", 1), 8, 4));
  EXPECT_THROW(shamsuddin::preimage_bounded(D("y1: a=x, b=1"), P("1", 2)), std::invalid_argument);
}

// Soundness, and completeness for targets built as D(f) with f in the box.
TEST(Image, PreimageSoundAndFindsConstructedTargets) {
  Gen gen(92);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    const Derivation d = gen.shamsuddin(n, 1, 1);
    MultiPoly f = gen.multipoly(n, 2, 3);
    const MultiPoly g = apply(d, f);
    const auto found = shamsuddin::preimage_bounded(d, g, 4, 2);
    ASSERT_TRUE(found);
    EXPECT_EQ(apply(d, *found), g);
    const MultiPoly target = gen.multipoly(n, 2, 3);
    if (const auto other = shamsuddin::preimage_bounded(d, target, 3, 2)) EXPECT_EQ(apply(d, *other), target);
  }
}

}  // namespace
