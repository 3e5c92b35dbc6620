#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "shamsuddin/rational.hpp"

namespace {

using shamsuddin::Rational;
using BoostRational = boost::multiprecision::cpp_rational;

std::string boost_text(const BoostRational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(Rational(mpz_class(6), mpz_class(-4)).to_string(), "-3/2");
  EXPECT_EQ(Rational(mpz_class(0), mpz_class(7)).to_string(), "0");
  EXPECT_EQ(Rational(5).to_string(), "5");
  std::ostringstream os;
  os << Rational(mpz_class(1), mpz_class(3));
  EXPECT_EQ(os.str(), "1/3");
}

TEST(Rational, ZeroDenominatorAndDivisionThrow) {
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, Predicates) {
  const Rational half(mpz_class(1), mpz_class(2));
  EXPECT_FALSE(half.is_integer());
  EXPECT_TRUE(Rational(-4).is_integer());
  EXPECT_TRUE(Rational(1).is_one());
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_EQ((-half).sign(), -1);
  EXPECT_EQ((-half).abs(), half);
  EXPECT_LT(-half, half);
}

// Field operations agree with Boost's cpp_rational on random operands,
// including numerators far beyond 64 bits.
TEST(Rational, AgreesWithBoostOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-1000, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    Rational a(mpz_class(small(rng)), mpz_class(small(rng) % 97 + 98));
    Rational b(mpz_class(small(rng)), mpz_class(small(rng) % 89 + 90));
    BoostRational oa(boost::multiprecision::cpp_int(a.numerator().get_str()),
                     boost::multiprecision::cpp_int(a.denominator().get_str()));
    BoostRational ob(boost::multiprecision::cpp_int(b.numerator().get_str()),
                     boost::multiprecision::cpp_int(b.denominator().get_str()));
    // Grow the operands so products exceed machine words.
    for (int k = 0; k < trial % 5; ++k) {
      a = a * a + Rational(3);
      oa = oa * oa + 3;
    }
    EXPECT_EQ((a + b).to_string(), boost_text(oa + ob));
    EXPECT_EQ((a - b).to_string(), boost_text(oa - ob));
    EXPECT_EQ((a * b).to_string(), boost_text(oa * ob));
    if (!b.is_zero()) EXPECT_EQ((a / b).to_string(), boost_text(oa / ob));
    EXPECT_EQ(a < b, oa < ob);
  }
}

TEST(Rational, FieldAxiomsProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-50, 50);
  auto draw = [&] { return Rational(mpz_class(d(rng)), mpz_class(d(rng) % 13 + 14)); };
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

}  // namespace
