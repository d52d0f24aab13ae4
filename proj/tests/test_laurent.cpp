#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "d4shear/laurent.hpp"
#include "d4shear/laurent_json.hpp"
#include "d4shear/surface.hpp"
#include "test_support.hpp"

using namespace d4shear::exactalg;
using d4shear::testing::random_laurent;

namespace {

ExponentVector y_units(int a, int b, int c) { return ExponentVector::from_y(2 * a, 2 * b, 2 * c); }

LaurentPoly half_p_monomial(int i, int sign) {
  std::array<int, 3> p{};
  p[i] = sign;
  return LaurentPoly::monomial(ExponentVector({}, p));
}

}  // namespace

TEST(SymplecticForm, CyclicConvention) {
  EXPECT_EQ(symplectic_form(y_units(1, 0, 0), y_units(0, 1, 0)), BigRational(1));
  EXPECT_EQ(symplectic_form(y_units(0, 1, 0), y_units(0, 0, 1)), BigRational(1));
  EXPECT_EQ(symplectic_form(y_units(0, 0, 1), y_units(1, 0, 0)), BigRational(1));
  EXPECT_EQ(symplectic_form(y_units(1, 1, 0), y_units(0, 1, 1)), BigRational(1));
}

TEST(SymplecticForm, AntisymmetricAndPCentral) {
  const ExponentVector a({3, -1, 2}, {1, 0, 0});
  const ExponentVector b({-2, 5, 1}, {0, -1, 2});
  EXPECT_EQ(symplectic_form(a, a), BigRational(0));
  EXPECT_EQ(symplectic_form(a, b), -symplectic_form(b, a));
  EXPECT_EQ(symplectic_form(y_units(1, 0, 0), ExponentVector({}, {1, 0, 0})), BigRational(0));
}

TEST(PoissonBracket, SingleMonomials) {
  const auto e1 = LaurentPoly::monomial(y_units(1, 0, 0));
  const auto e2 = LaurentPoly::monomial(y_units(0, 1, 0));
  EXPECT_EQ(poisson_bracket(e1, e2), LaurentPoly::monomial(y_units(1, 1, 0)));
}

TEST(PoissonBracket, GoldmanFirstRelation) {
  const auto t = d4shear::surface::geodesic_functions();
  const auto w13 = parameter_symbol(1) * parameter_symbol(3) + parameter_symbol(2) * d4shear::surface::g_infinity();
  EXPECT_EQ(poisson_bracket(t.g12, t.g23), t.g12 * t.g23 - LaurentPoly(2L) * t.g13 - w13);
}

TEST(PoissonBracket, RandomProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_laurent(rng), g = random_laurent(rng), h = random_laurent(rng);
    EXPECT_TRUE(poisson_bracket(f, f).is_zero());
    EXPECT_EQ(poisson_bracket(f, g), -poisson_bracket(g, f));
    const auto jacobi = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                        poisson_bracket(h, poisson_bracket(f, g));
    EXPECT_TRUE(jacobi.is_zero());
    EXPECT_EQ(poisson_bracket(f, g * h), poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
  }
}

TEST(PoissonBracket, CentralElements) {
  std::mt19937_64 rng(12);
  const auto ginf = d4shear::surface::g_infinity();
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_laurent(rng);
    for (int i = 0; i < 3; ++i) {
      EXPECT_TRUE(poisson_bracket(f, half_p_monomial(i, 1)).is_zero());
      EXPECT_TRUE(poisson_bracket(f, half_p_monomial(i, -1)).is_zero());
      EXPECT_TRUE(poisson_bracket(f, parameter_symbol(i + 1)).is_zero());
    }
    EXPECT_TRUE(poisson_bracket(f, LaurentPoly::monomial(y_units(1, 1, 1))).is_zero());
    EXPECT_TRUE(poisson_bracket(f, ginf).is_zero());
  }
}

TEST(CanonicalForm, DifferenceIsZeroIffTermMapsAgree) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = random_laurent(rng, 3);
    const auto g = trial % 2 == 0 ? f : random_laurent(rng, 3);
    EXPECT_EQ((f - g).is_zero(), f.terms() == g.terms());
  }
}

TEST(CanonicalForm, NoZeroCoefficientsStored) {
  LaurentPoly f = y_monomial(2, 0, 0);
  f -= y_monomial(2, 0, 0);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.size(), 0u);
}

TEST(ExponentVector, RejectsNegativeParameterPowers) {
  EXPECT_THROW(ExponentVector({}, {}, {0, -1, 0}), std::invalid_argument);
}

TEST(ExponentVector, OverflowIsChecked) {
  const ExponentVector big({std::numeric_limits<int>::max(), 0, 0});
  EXPECT_THROW(big + ExponentVector({1, 0, 0}), std::overflow_error);
}

TEST(Evaluate, Examples) {
  const auto t = d4shear::surface::geodesic_functions();
  const auto origin = EvalPoint::from_coordinates({0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
  EXPECT_NEAR(std::abs(evaluate(t.g12, origin) - 3.0), 0.0, 1e-15);
  EXPECT_EQ(evaluate(LaurentPoly(1L), origin), std::complex<double>(1.0));
  const auto pt = EvalPoint::from_coordinates({std::log(2.0), 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
  EXPECT_NEAR(std::abs(evaluate(y_monomial(2, 0, 0), pt) - 2.0), 0.0, 1e-15);
}

TEST(Evaluate, ZeroExponentialIsDomainError) {
  EvalPoint pt;
  pt.exp_half_y[1] = 0.0;
  EXPECT_THROW(evaluate(LaurentPoly(1L), pt), std::domain_error);
}

TEST(Evaluate, IsMultiplicative) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_laurent(rng), g = random_laurent(rng);
    EvalPoint pt;
    for (int i = 0; i < 3; ++i) {
      pt.exp_half_y[i] = std::exp(d4shear::testing::random_complex(rng, 0.5));
      pt.exp_half_p[i] = std::exp(d4shear::testing::random_complex(rng, 0.5));
      pt.g[i] = d4shear::testing::random_complex(rng);
    }
    const auto lhs = evaluate(f * g, pt), rhs = evaluate(f, pt) * evaluate(g, pt);
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(SubstituteTilde, ShiftsPartnerExponent) {
  const auto f = substitute_tilde(y_monomial(2, 0, 0));
  EXPECT_EQ(f, LaurentPoly::monomial(ExponentVector({2, 0, 0}, {-1, 0, 0})));
  EXPECT_EQ(substitute_tilde(LaurentPoly(5L)), LaurentPoly(5L));
}

TEST(SubstituteTilde, RoundTripAndHomomorphism) {
  std::mt19937_64 rng(15);
  auto even = [&] {
    auto f = random_laurent(rng);
    return f.map_keys([](ExponentVector k) {
      for (int& v : k.y) v *= 2;
      return k;
    });
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = even(), g = even();
    EXPECT_EQ(invert_tilde(substitute_tilde(f)), f);
    EXPECT_EQ(substitute_tilde(f * g), substitute_tilde(f) * substitute_tilde(g));
  }
}

TEST(SubstituteTilde, OddExponentIsRejected) {
  EXPECT_THROW(substitute_tilde(y_monomial(1, 0, 0)), std::domain_error);
}

TEST(Substitutions, HoleParametersAndSpecialisation) {
  const auto g1 = substitute_hole_parameters(parameter_symbol(1));
  EXPECT_EQ(g1, half_p_monomial(0, 1) + half_p_monomial(0, -1));
  EXPECT_EQ(reflect_perimeters(g1), g1);
  const auto f = parameter_symbol(2) * parameter_symbol(2) + parameter_symbol(3);
  EXPECT_EQ(specialise_parameter(f, 2, BigRational(3)), LaurentPoly(9L) + parameter_symbol(3));
}

TEST(LaurentJson, RoundTripIsExact) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_laurent(rng);
    const auto j = to_json(f);
    EXPECT_EQ(laurent_from_json(j), f);
    EXPECT_EQ(to_json(laurent_from_json(nlohmann::json::parse(j.dump()))).dump(), j.dump());
  }
}

TEST(LaurentJson, Shape) {
  const auto j = to_json(LaurentPoly::monomial(ExponentVector({2, 0, 0}, {0, 1, 0}, {0, 0, 1}), BigRational(-3, 2)));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["coeff"], "-3/2");
  EXPECT_EQ(j[0]["y"], nlohmann::json({2, 0, 0}));
  EXPECT_EQ(j[0]["p"], nlohmann::json({0, 1, 0}));
  EXPECT_EQ(j[0]["g"], nlohmann::json({0, 0, 1}));
}

TEST(LaurentJson, SchemaErrors) {
  EXPECT_THROW(laurent_from_json(nlohmann::json::object()), std::invalid_argument);
  EXPECT_THROW(laurent_from_json(nlohmann::json::parse(R"([{"coeff":"1/1","y":[0,0],"p":[0,0,0],"g":[0,0,0]}])")),
               std::invalid_argument);
}
