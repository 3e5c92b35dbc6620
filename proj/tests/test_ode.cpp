#include <gtest/gtest.h>

#include "shamsuddin/ode.hpp"
#include "shamsuddin/textio.hpp"
#include "support.hpp"

namespace {

using shamsuddin::ParamSolution;
using shamsuddin::QVector;
using shamsuddin::Rational;
using shamsuddin::UniPoly;
using shamsuddin::testing::Gen;

UniPoly U(const char* text) { return *shamsuddin::parse_poly(text, 0).as_univariate(); }

TEST(Ode, DegreeBoundExamples) {
  const std::vector<UniPoly> one{U("1")}, lin{U("x")}, sq{U("x^2")};
  EXPECT_FALSE(shamsuddin::degree_bound(U("x"), one).has_value());
  EXPECT_EQ(shamsuddin::degree_bound(U("1"), lin), 1u);
  EXPECT_EQ(shamsuddin::degree_bound(U("0"), sq), 3u);
  EXPECT_EQ(shamsuddin::degree_bound(U("x"), sq), 1u);
}

TEST(Ode, SolveLinearExamples) {
  auto s = shamsuddin::solve_linear_ode(U("0"), U("1"));
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(s.particular->derivative(), U("1"));
  EXPECT_EQ(s.homogeneous_dim, 1u);
  s = shamsuddin::solve_linear_ode(U("1"), U("x"));
  EXPECT_EQ(s.particular, U("-x - 1"));
  EXPECT_EQ(s.homogeneous_dim, 0u);
  s = shamsuddin::solve_linear_ode(U("x"), U("1"));
  EXPECT_FALSE(s.particular.has_value());
  EXPECT_EQ(s.homogeneous_dim, 0u);
}

TEST(Ode, SolveLinearAgreesWithOracleProperty) {
  Gen gen(61);
  for (int t = 0; t < 300; ++t) {
    const UniPoly a = gen.unipoly(3), c = gen.unipoly(4);
    const auto s = shamsuddin::solve_linear_ode(a, c);
    const auto oracle = shamsuddin::testing::oracle_linear_ode(a, c, 12);
    EXPECT_EQ(s.particular.has_value(), oracle.particular.has_value());
    EXPECT_EQ(s.homogeneous_dim, oracle.homogeneous.size());
    if (s.particular) EXPECT_EQ(s.particular->derivative(), a * *s.particular + c);
  }
}

TEST(Ode, ParametricExamples) {
  {
    const std::vector<UniPoly> bs{U("1")};
    const auto space = shamsuddin::solve_parametric(U("x"), bs);
    EXPECT_TRUE(space.basis.empty());
    EXPECT_FALSE(shamsuddin::has_nonzero_k_solution(space));
  }
  {
    const std::vector<UniPoly> bs{U("x")};
    const auto space = shamsuddin::solve_parametric(U("1"), bs);
    ASSERT_EQ(space.basis.size(), 1u);
    const auto w = shamsuddin::has_nonzero_k_solution(space);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->k, (QVector{1}));
    EXPECT_EQ(w->z, U("-x - 1"));
  }
  {
    const std::vector<UniPoly> bs{U("x"), U("-x")};
    const auto space = shamsuddin::solve_parametric(U("x^2"), bs);
    const ParamSolution expected{QVector{1, 1}, UniPoly()};
    EXPECT_TRUE(shamsuddin::satisfies_parametric(U("x^2"), bs, expected));
    const auto w = shamsuddin::has_nonzero_k_solution(space);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->k, (QVector{1, 1}));
    EXPECT_TRUE(w->z.is_zero());
  }
  {
    const std::vector<UniPoly> bs{U("1")};
    const auto w = shamsuddin::has_nonzero_k_solution(shamsuddin::solve_parametric(U("0"), bs));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->k, (QVector{1}));
    EXPECT_EQ(w->z, U("x"));
  }
}

TEST(Ode, ParametricRejectsEmptyInput) {
  EXPECT_THROW(shamsuddin::solve_parametric(U("x"), std::vector<UniPoly>{}), std::invalid_argument);
}

// Every basis vector satisfies the system and the basis is independent.
TEST(Ode, ParametricBasisSoundProperty) {
  Gen gen(62);
  for (int t = 0; t < 300; ++t) {
    const UniPoly a = gen.unipoly(3);
    std::vector<UniPoly> bs;
    const long r = gen.integer(1, 3);
    for (long j = 0; j < r; ++j) bs.push_back(gen.unipoly(3));
    const auto space = shamsuddin::solve_parametric(a, bs);
    EXPECT_EQ(space.r, bs.size());
    std::vector<QVector> flat;
    for (const auto& s : space.basis) {
      EXPECT_TRUE(shamsuddin::satisfies_parametric(a, bs, s));
      QVector v = s.k;
      for (std::size_t i = 0; i < space.ambient_dim() - space.r; ++i) v.push_back(s.z.coeff(i));
      flat.push_back(v);
    }
    EXPECT_EQ(shamsuddin::testing::oracle_rank(flat, space.ambient_dim()), flat.size());
    if (const auto w = shamsuddin::has_nonzero_k_solution(space)) EXPECT_TRUE(shamsuddin::satisfies_parametric(a, bs, *w));
  }
}

}  // namespace
