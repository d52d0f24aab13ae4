#include <gtest/gtest.h>

#include <numbers>

#include "d4shear/complex_literal.hpp"

using d4shear::cli::parse_complex;
using d4shear::cli::parse_complex_list;
using cd = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(ComplexLiteral, Basic) {
  EXPECT_EQ(parse_complex("0"), cd(0.0));
  EXPECT_EQ(parse_complex("-0.25"), cd(-0.25));
  EXPECT_EQ(parse_complex("1.5-2i"), cd(1.5, -2.0));
  EXPECT_EQ(parse_complex("i"), cd(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), cd(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-3"), cd(1e-3));
  EXPECT_EQ(parse_complex(" 2 + 3i "), cd(2.0, 3.0));
}

TEST(ComplexLiteral, PiProducts) {
  EXPECT_NEAR(std::abs(parse_complex("i*pi") - cd(0.0, kPi)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse_complex("2pi i") - cd(0.0, 2 * kPi)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse_complex("0.3+i*pi") - cd(0.3, kPi)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse_complex("π") - cd(kPi)), 0.0, 1e-15);
}

TEST(ComplexLiteral, Rejects) {
  for (const char* bad : {"", "abc", "1+", "2**i", "1..2", "i i x", "+"}) {
    EXPECT_THROW(parse_complex(bad), std::invalid_argument) << bad;
  }
}

TEST(ComplexLiteral, List) {
  const auto v = parse_complex_list("0.1, -0.2i, i*pi", 3);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], cd(0.1));
  EXPECT_EQ(v[1], cd(0.0, -0.2));
  EXPECT_THROW(parse_complex_list("1,2", 3), std::invalid_argument);
}
