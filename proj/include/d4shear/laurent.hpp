#pragma once

#include <array>
#include <complex>
#include <compare>
#include <string>

#include "d4shear/rational.hpp"
#include "d4shear/sparse_poly.hpp"

namespace d4shear::exactalg {

/// Monomial e^{sum y_i Y_i/2 + sum p_i P_i/2} * G_1^{g_1} G_2^{g_2} G_3^{g_3}.
///
/// `y` and `p` count half-units; geodesic functions live on the even `y`
/// sublattice. Parameter powers `g` are non-negative. Component arithmetic
/// is overflow-checked.
struct ExponentVector {
  std::array<int, 3> y{};
  std::array<int, 3> p{};
  std::array<int, 3> g{};

  ExponentVector() = default;
  ExponentVector(std::array<int, 3> y_half, std::array<int, 3> p_half = {},
                 std::array<int, 3> g_pow = {});

  static ExponentVector from_y(int y1, int y2, int y3) { return ExponentVector({y1, y2, y3}); }
  static ExponentVector parameter(int index, int power = 1);

  bool is_unit() const { return *this == ExponentVector{}; }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

using LaurentPoly = SparsePoly<ExponentVector>;

/// e^{(n1 Y1 + n2 Y2 + n3 Y3)/2} with coefficient 1.
LaurentPoly y_monomial(int n1, int n2, int n3);
/// The commuting parameter symbol G_i, i in {1,2,3}.
LaurentPoly parameter_symbol(int index);

/// Constant Poisson structure: {Y_i, Y_{i+1}} = 1 cyclically, P and G central.
/// In half-units this is (1/4) a_y^T M b_y.
BigRational symplectic_form(const ExponentVector& a, const ExponentVector& b);

/// Integer form a^T M b on three-component integer vectors (full units).
int lattice_form(const std::array<int, 3>& a, const std::array<int, 3>& b);

/// Bilinear extension of {x^a, x^b} = omega(a,b) x^{a+b}.
LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g);

/// Values substituted by `evaluate`: e^{Y_i/2}, e^{P_i/2} and G_i.
struct EvalPoint {
  std::array<std::complex<double>, 3> exp_half_y{1.0, 1.0, 1.0};
  std::array<std::complex<double>, 3> exp_half_p{1.0, 1.0, 1.0};
  std::array<std::complex<double>, 3> g{0.0, 0.0, 0.0};

  /// Point given by the coordinates themselves: Y_i, P_i and the G_i values.
  static EvalPoint from_coordinates(const std::array<std::complex<double>, 3>& Y,
                                    const std::array<std::complex<double>, 3>& P,
                                    const std::array<std::complex<double>, 3>& G);
};

/// Substitutes the point into f. Throws std::domain_error if an exponential
/// value is zero.
std::complex<double> evaluate(const LaurentPoly& f, const EvalPoint& point);

/// e^{Y~_i} -> e^{Y_i - P_i/2}: shifts p_i by -y_i/2. Requires even y.
LaurentPoly substitute_tilde(const LaurentPoly& f);
/// Inverse of substitute_tilde.
LaurentPoly invert_tilde(const LaurentPoly& f);
/// P_i -> -P_i.
LaurentPoly reflect_perimeters(const LaurentPoly& f);
/// G_i -> e^{P_i/2} + e^{-P_i/2} for every i.
LaurentPoly substitute_hole_parameters(const LaurentPoly& f);
/// G_index -> value (exact specialisation).
LaurentPoly specialise_parameter(const LaurentPoly& f, int index, const BigRational& value);

/// Debug rendering, e.g. "2*eY(2,0,0)/2*G1 + -1".
std::string to_string(const LaurentPoly& f);

}  // namespace d4shear::exactalg
