#include <gtest/gtest.h>

#include "d4shear/qtorus.hpp"
#include "d4shear/surface.hpp"
#include "test_support.hpp"

using namespace d4shear::qtorus;
using d4shear::exactalg::LaurentPoly;
using d4shear::testing::random_qtorus;

namespace {
QTorusElement X(int a, int b, int c) { return QTorusElement::weyl({a, b, c}); }
}  // namespace

TEST(QTorus, BakerCampbellHausdorffFactor) {
  EXPECT_EQ(qmul(X(1, 0, 0), X(0, 1, 0)), q_shift(X(1, 1, 0), -1));
  EXPECT_EQ(X(1, 0, 0) * X(-1, 0, 0), QTorusElement(1L));
  EXPECT_EQ(X(1, 0, 0) * X(0, 1, 0), q_shift(X(0, 1, 0) * X(1, 0, 0), -2));
}

TEST(QTorus, QCommutatorOfMonomials) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::array<int, 3> a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
    const auto w = d4shear::exactalg::lattice_form(a, b);
    EXPECT_EQ(QTorusElement::weyl(a) * QTorusElement::weyl(b),
              q_shift(QTorusElement::weyl(b) * QTorusElement::weyl(a), -2 * w));
  }
}

TEST(QTorus, Associativity) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_qtorus(rng), b = random_qtorus(rng), c = random_qtorus(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(QTorus, DaggerIsAntiAutomorphism) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_qtorus(rng), b = random_qtorus(rng);
    EXPECT_EQ(dagger(a * b), dagger(b) * dagger(a));
    EXPECT_EQ(dagger(dagger(a)), a);
  }
  EXPECT_EQ(dagger(q_shift(X(1, 2, 0), 1)), q_shift(X(1, 2, 0), -1));
  EXPECT_EQ(dagger(QTorusElement(1L)), QTorusElement(1L));
}

TEST(QTorus, GeodesicOperatorsAreHermitian) {
  const auto t = d4shear::surface::quantum_geodesic_functions();
  EXPECT_EQ(dagger(t.g12), t.g12);
  EXPECT_EQ(dagger(t.g23), t.g23);
  EXPECT_EQ(dagger(t.g13), t.g13);
}

TEST(QTorus, ClassicalLimit) {
  EXPECT_EQ(classical_limit(q_shift(X(1, 1, 0), 1)), d4shear::exactalg::y_monomial(2, 2, 0));
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_qtorus(rng), b = random_qtorus(rng);
    EXPECT_EQ(classical_limit(qmul(a, b)), classical_limit(a) * classical_limit(b));
  }
  const auto q = d4shear::surface::quantum_geodesic_functions();
  const auto c = d4shear::surface::geodesic_functions();
  EXPECT_EQ(classical_limit(q.g12), c.g12);
  EXPECT_EQ(classical_limit(q.g23), c.g23);
  EXPECT_EQ(classical_limit(q.g13), c.g13);
}

TEST(QTorus, QuantumGInfinityIsCentral) {
  const auto ginf = X(1, 1, 1) + X(-1, -1, -1);
  EXPECT_EQ(ginf, d4shear::surface::quantum_g_infinity());
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) EXPECT_TRUE(commutator(ginf, random_qtorus(rng)).is_zero());
}

TEST(QTorus, CoefficientsMustBeParameterPolynomials) {
  EXPECT_THROW(QTorusElement(d4shear::exactalg::y_monomial(2, 0, 0)), std::invalid_argument);
  EXPECT_NO_THROW(QTorusElement(d4shear::exactalg::parameter_symbol(2)));
}

TEST(QTorus, JsonRoundTrip) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_qtorus(rng);
    EXPECT_EQ(qtorus_from_json(nlohmann::json::parse(to_json(a).dump())), a);
  }
  EXPECT_THROW(qtorus_from_json(nlohmann::json::parse(R"([{"qh":0,"a":[0,0,0]}])")), std::invalid_argument);
}
