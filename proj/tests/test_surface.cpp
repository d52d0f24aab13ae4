#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "d4shear/eg_dictionary.hpp"
#include "d4shear/surface.hpp"
#include "test_support.hpp"

using namespace d4shear::surface;
using d4shear::exactalg::BigRational;
using d4shear::exactalg::ExponentVector;
using d4shear::exactalg::parameter_symbol;
using d4shear::exactalg::poisson_bracket;

namespace {

constexpr double kPi = std::numbers::pi;
const std::array<complex, 3> kZero{0.0, 0.0, 0.0};

}  // namespace

TEST(GeodesicFunctions, FiveTermsWithUnitPureExponentials) {
  const auto t = geodesic_functions();
  for (const auto* g : {&t.g12, &t.g23, &t.g13}) {
    ASSERT_EQ(g->size(), 5u);
    int pure = 0;
    for (const auto& [k, c] : g->terms()) {
      EXPECT_EQ(c, BigRational(1));
      for (int v : k.y) EXPECT_EQ(v % 2, 0);
      if (k.g == std::array<int, 3>{}) ++pure;
    }
    EXPECT_EQ(pure, 3);
  }
  // G12 = e^{Y1+Y2} + e^{-Y1-Y2} + e^{-Y1+Y2} + G1 e^{Y2} + G2 e^{-Y1}
  const auto expected = d4shear::exactalg::y_monomial(2, 2, 0) + d4shear::exactalg::y_monomial(-2, -2, 0) +
                        d4shear::exactalg::y_monomial(-2, 2, 0) +
                        parameter_symbol(1) * d4shear::exactalg::y_monomial(0, 2, 0) +
                        parameter_symbol(2) * d4shear::exactalg::y_monomial(-2, 0, 0);
  EXPECT_EQ(t.g12, expected);
}

TEST(GeodesicFunctions, OriginValues) {
  const auto t = geodesic_functions();
  const auto pt = shear_eval_point(kZero, kZero);
  for (const auto* g : {&t.g12, &t.g23, &t.g13}) EXPECT_NEAR(std::abs(evaluate(*g, pt) - 3.0), 0.0, 1e-15);
}

TEST(GeodesicFunctions, OrbifoldOrderFourIsGZero) {
  const auto orb = geodesic_functions(HoleParams::orbifold({4, 4, 4}));
  const auto sym = geodesic_functions();
  auto zero = [](d4shear::exactalg::LaurentPoly f) {
    for (int i = 1; i <= 3; ++i) f = d4shear::exactalg::specialise_parameter(f, i, BigRational(0));
    return f;
  };
  EXPECT_EQ(orb.g12, zero(sym.g12));
  EXPECT_EQ(orb.g23, zero(sym.g23));
  EXPECT_EQ(orb.g13, zero(sym.g13));
}

TEST(HoleParamsTest, OrbifoldValues) {
  EXPECT_NEAR(orbifold_parameter(3), -1.0, 1e-15);
  EXPECT_NEAR(orbifold_parameter(4), 0.0, 1e-15);
  EXPECT_NEAR(orbifold_parameter(6), 1.0, 1e-15);
  EXPECT_LT(orbifold_parameter(1000), 2.0);
  EXPECT_THROW(orbifold_parameter(2), std::invalid_argument);
  EXPECT_THROW(HoleParams::orbifold({4, 2, 4}), std::invalid_argument);
  EXPECT_EQ(exact_orbifold_parameter(6), BigRational(1));
  EXPECT_FALSE(exact_orbifold_parameter(5).has_value());
}

TEST(HoleParamsTest, SymbolicAndMixed) {
  EXPECT_TRUE(HoleParams::symbolic().is_symbolic());
  EXPECT_THROW(HoleParams::symbolic().values(), std::logic_error);
  const auto m = HoleParams::mixed({Puncture{PunctureKind::hole, complex(0.5), 0},
                                    Puncture{PunctureKind::orbifold, std::nullopt, 3},
                                    Puncture{PunctureKind::hole, std::nullopt, 0}});
  EXPECT_TRUE(m.is_symbolic());
  EXPECT_EQ(m.exact_value(2), BigRational(-1));
  const auto t = geodesic_functions(m);
  // G2 -> -1 exactly: the G2 e^{-Y1} term of G12 becomes -e^{-Y1}.
  EXPECT_EQ(t.g12.coefficient(ExponentVector::from_y(-2, 0, 0)), BigRational(-1));
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(1, 3), parameter_symbol(1) * parameter_symbol(3) + parameter_symbol(2) * g_infinity());
  EXPECT_EQ(omega(3, 1), omega(1, 3));
  EXPECT_TRUE(omega(1, 2, HoleParams::orbifold({4, 4, 4})).is_zero());
  EXPECT_TRUE(poisson_bracket(omega(1, 3), geodesic_functions().g12).is_zero());
  EXPECT_THROW(omega(2, 2), std::invalid_argument);
}

TEST(GInfinity, ValueAndCentrality) {
  EXPECT_NEAR(std::abs(evaluate(g_infinity(), shear_eval_point(kZero, kZero)) - 2.0), 0.0, 1e-15);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(poisson_bracket(d4shear::testing::random_laurent(rng), g_infinity()).is_zero());
  }
  const auto qt = quantum_geodesic_functions();
  for (const auto* g : {&qt.g12, &qt.g23, &qt.g13}) {
    EXPECT_TRUE(d4shear::qtorus::commutator(quantum_g_infinity(), *g).is_zero());
  }
}

TEST(CentralElement, NumericExamples) {
  EXPECT_EQ(central_element<complex>(3.0, 3.0, 3.0, 0.0, 0.0, 0.0), complex(0.0));
  EXPECT_EQ(central_element<complex>(0.0, 0.0, 0.0, 0.0, 0.0, 0.0), complex(0.0));
}

TEST(ExactIdentities, GoldmanBrackets) {
  for (const auto& id : goldman_identities()) EXPECT_TRUE(id.holds()) << id.name;
  for (const auto& id : goldman_identities(HoleParams::orbifold({3, 4, 6}))) EXPECT_TRUE(id.holds()) << id.name;
}

TEST(ExactIdentities, CasimirIsCentral) {
  for (const auto& id : casimir_identities()) EXPECT_TRUE(id.holds()) << id.name;
}

TEST(ExactIdentities, Fricke) {
  EXPECT_TRUE(fricke_check().holds());
  const auto params = HoleParams::orbifold({4, 4, 4});
  const auto c = central_element(geodesic_functions(params), omegas(params));
  EXPECT_EQ(c, d4shear::exactalg::LaurentPoly(4L) - g_infinity() * g_infinity());
}

TEST(MuMap, Origin) {
  const auto p = mu_eval(kZero, HoleParams::holes(kZero));
  EXPECT_NEAR(std::abs(p.u - 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.v - 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.w - 3.0), 0.0, 1e-15);
  for (const auto& r : p.r) EXPECT_NEAR(std::abs(r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.residual), 0.0, 1e-12);
  EXPECT_EQ(phi_tilde(0.0, 0.0, 0.0, {0.0, 0.0, 0.0, 0.0}), complex(0.0));
}

TEST(MuMap, OrbifoldFourMatchesGZero) {
  const std::array<complex, 3> y{0.3, complex(-0.2, 0.1), 0.7};
  const auto a = mu_eval(y, HoleParams::orbifold({4, 4, 4}));
  const auto b = mu_eval(y, HoleParams::holes(kZero));
  EXPECT_NEAR(std::abs(a.u - b.u) + std::abs(a.v - b.v) + std::abs(a.w - b.w), 0.0, 1e-14);
}

TEST(MuMap, LandsOnCubic) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> g(0.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const std::array<complex, 3> y{d4shear::testing::random_complex(rng), d4shear::testing::random_complex(rng),
                                   d4shear::testing::random_complex(rng)};
    const auto p = mu_eval(y, HoleParams::holes({g(rng), g(rng), g(rng)}));
    EXPECT_LE(std::abs(p.residual), 1e-9 * (1.0 + p.scale));
  }
}

TEST(EgBracket, Examples) {
  SurfacePoint p;
  p.u = p.v = p.w = 3.0;
  const auto b = eg_bracket(p);
  EXPECT_EQ(b[0], complex(-3.0));
  EXPECT_EQ(b[1], complex(-3.0));
  EXPECT_EQ(b[2], complex(-3.0));
  const auto o = eg_bracket(SurfacePoint{});
  for (const auto& x : o) EXPECT_EQ(x, complex(0.0));
}

TEST(EgBracket, MatchesGoldmanBracketOfG12G13) {
  const std::array<complex, 3> y{0.4, complex(0.1, -0.3), -0.6};
  const std::array<complex, 3> g{0.3, 1.2, 0.8};
  const auto params = HoleParams::holes(g);
  const auto t = geodesic_functions();
  const complex goldman = evaluate(poisson_bracket(t.g12, t.g13), shear_eval_point(y, g));
  const complex eg = eg_bracket(mu_eval(y, params))[0];
  EXPECT_LE(std::abs(goldman - eg), 1e-9 * std::max(1.0, std::abs(eg)));
}

TEST(EgDictionary, ResolverConfirmsConstants) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> g(0.0, 2.0);
  std::vector<EgSample> samples;
  for (int i = 0; i < 30; ++i) {
    samples.push_back({{d4shear::testing::random_complex(rng), d4shear::testing::random_complex(rng),
                        d4shear::testing::random_complex(rng)},
                       {g(rng), g(rng), g(rng)}});
  }
  const auto found = resolve_eg_pairings(samples, 1e-9);
  for (int k = 0; k < 3; ++k) {
    // Exactly one bracket up to antisymmetry: (a, b, s) and (b, a, -s).
    ASSERT_EQ(found[k].size(), 2u) << k;
    const auto& c = kEgPairings[k];
    bool listed = false;
    for (const auto& f : found[k]) listed = listed || (f.first == c.first && f.second == c.second && f.sign == c.sign);
    EXPECT_TRUE(listed) << c.eg_name;
    EXPECT_EQ(found[k][0].first, found[k][1].second);
    EXPECT_EQ(found[k][0].sign, -found[k][1].sign);
  }
}

TEST(DegenerateLeaves, CasimirIsZeroOnEveryIntegerLeaf) {
  for (long n = -3; n <= 4; ++n) EXPECT_TRUE(casimir_on_leaf(n).is_zero()) << n;
}

TEST(DegenerateLeaves, ClassificationAndValues) {
  const auto params = HoleParams::holes(kZero);
  for (long n = 0; n <= 3; ++n) {
    const std::array<complex, 3> y{0.3, -0.3, complex(0.0, kPi * n)};
    const auto leaf = classify_leaf(y, params);
    EXPECT_TRUE(leaf.on_leaf);
    EXPECT_EQ(leaf.n, n);
    EXPECT_NEAR(std::abs(leaf.casimir), 0.0, 1e-12);
  }
  // C = 4 lives on the half-integer leaves.
  const std::array<complex, 3> half{0.2, 0.1, complex(-0.3, kPi / 2)};
  const auto leaf = classify_leaf(half, params);
  EXPECT_FALSE(leaf.on_leaf);
  EXPECT_NEAR(std::abs(leaf.casimir - 4.0), 0.0, 1e-12);
  // Off the leaf or with G != 0 nothing is flagged.
  EXPECT_FALSE(classify_leaf({0.1, 0.2, 0.3}, params).on_leaf);
  EXPECT_FALSE(classify_leaf({0.0, 0.0, complex(0.0, kPi)}, HoleParams::holes({0.5, 0.0, 0.0})).on_leaf);
}
