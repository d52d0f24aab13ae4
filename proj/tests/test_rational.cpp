#include <gtest/gtest.h>

#include <stdexcept>

#include "d4shear/rational.hpp"

using d4shear::exactalg::BigRational;

TEST(BigRational, ReducesToLowestTerms) {
  EXPECT_EQ(BigRational(6, 8).str(), "3/4");
  EXPECT_EQ(BigRational(3, -6).str(), "-1/2");
  EXPECT_EQ(BigRational(0, -5).str(), "0/1");
  EXPECT_EQ(BigRational().str(), "0/1");
}

TEST(BigRational, ZeroDenominatorThrows) { EXPECT_THROW(BigRational(1, 0), std::domain_error); }

TEST(BigRational, DivisionByZeroThrows) { EXPECT_THROW(BigRational(1) / BigRational(0), std::domain_error); }

TEST(BigRational, ParsesIntegersAndFractions) {
  EXPECT_EQ(BigRational::parse("-12"), BigRational(-12));
  EXPECT_EQ(BigRational::parse("10/4"), BigRational(5, 2));
  const auto big = BigRational::parse("123456789012345678901234567891/2");
  EXPECT_EQ(big.numerator_str(), "123456789012345678901234567891");
  EXPECT_THROW(BigRational::parse("1/0"), std::domain_error);
  EXPECT_THROW(BigRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse(""), std::invalid_argument);
}

TEST(BigRational, ArithmeticAndOrdering) {
  const BigRational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, BigRational(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, BigRational(1, 18));
  EXPECT_EQ(a / b, BigRational(2));
  EXPECT_EQ(-a, BigRational(-1, 3));
  EXPECT_LT(b, a);
  EXPECT_TRUE(BigRational(4, 2).is_integer());
  EXPECT_EQ(BigRational(-3, 7).sign(), -1);
  EXPECT_DOUBLE_EQ(BigRational(1, 4).to_double(), 0.25);
}

TEST(BigRational, ArbitraryPrecisionDoesNotOverflow) {
  BigRational x(1);
  for (int i = 0; i < 200; ++i) x *= BigRational(3);
  for (int i = 0; i < 200; ++i) x /= BigRational(3);
  EXPECT_EQ(x, BigRational(1));
}
