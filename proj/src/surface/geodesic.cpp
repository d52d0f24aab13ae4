#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "d4shear/surface.hpp"

namespace d4shear::surface {

using exactalg::ExponentVector;
using exactalg::parameter_symbol;
using exactalg::poisson_bracket;
using exactalg::y_monomial;

double orbifold_parameter(int order) {
  if (order < 3) {
    throw std::invalid_argument("orbifold order must be >= 3 (order 2 gives G = -2 and needs separate treatment), got " +
                                std::to_string(order));
  }
  return 2.0 * std::cos(2.0 * std::numbers::pi / order);
}

std::optional<BigRational> exact_orbifold_parameter(int order) {
  orbifold_parameter(order);  // validates
  switch (order) {
    case 3: return BigRational(-1);
    case 4: return BigRational(0);
    case 6: return BigRational(1);
    default: return std::nullopt;
  }
}

HoleParams HoleParams::symbolic() { return HoleParams{}; }

HoleParams HoleParams::holes(const std::array<complex, 3>& g) {
  HoleParams p;
  for (int i = 0; i < 3; ++i) p.punctures_[i] = Puncture{PunctureKind::hole, g[i], 0};
  return p;
}

HoleParams HoleParams::orbifold(const std::array<int, 3>& orders) {
  HoleParams p;
  for (int i = 0; i < 3; ++i) {
    p.punctures_[i] = Puncture{PunctureKind::orbifold, complex(orbifold_parameter(orders[i]), 0.0), orders[i]};
  }
  return p;
}

HoleParams HoleParams::mixed(const std::array<Puncture, 3>& punctures) {
  HoleParams p;
  for (int i = 0; i < 3; ++i) {
    Puncture q = punctures[i];
    if (q.kind == PunctureKind::orbifold) q.value = complex(orbifold_parameter(q.order), 0.0);
    p.punctures_[i] = q;
  }
  return p;
}

bool HoleParams::is_symbolic() const {
  for (const auto& p : punctures_) {
    if (!p.value) return true;
  }
  return false;
}

std::array<complex, 3> HoleParams::values() const {
  std::array<complex, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (!punctures_[i].value) throw std::logic_error("HoleParams::values: G_" + std::to_string(i + 1) + " is symbolic");
    out[i] = *punctures_[i].value;
  }
  return out;
}

std::optional<BigRational> HoleParams::exact_value(int i) const {
  const Puncture& p = puncture(i);
  if (p.kind == PunctureKind::orbifold) return exact_orbifold_parameter(p.order);
  return std::nullopt;
}

namespace {

LaurentPoly specialise(LaurentPoly f, const HoleParams& params) {
  for (int i = 1; i <= 3; ++i) {
    if (auto v = params.exact_value(i)) f = exactalg::specialise_parameter(f, i, *v);
  }
  return f;
}

QTorusElement specialise(const QTorusElement& f, const HoleParams& params) {
  QTorusElement r;
  for (const auto& [k, c] : f.terms()) r.add_term(k, specialise(c, params));
  return r;
}

// e^{Y_a+Y_b} + e^{-Y_a-Y_b} + e^{-Y_a+Y_b} + G_a e^{Y_b} + G_b e^{-Y_a}, a -> b cyclic.
std::array<std::array<int, 3>, 5> five_term_exponents(int a, int b) {
  std::array<std::array<int, 3>, 5> e{};
  e[0][a] = 1, e[0][b] = 1;
  e[1][a] = -1, e[1][b] = -1;
  e[2][a] = -1, e[2][b] = 1;
  e[3][b] = 1;
  e[4][a] = -1;
  return e;
}

LaurentPoly five_term(int a, int b) {
  const auto e = five_term_exponents(a, b);
  LaurentPoly r;
  for (int t = 0; t < 5; ++t) {
    LaurentPoly m = y_monomial(2 * e[t][0], 2 * e[t][1], 2 * e[t][2]);
    if (t == 3) m *= parameter_symbol(a + 1);
    if (t == 4) m *= parameter_symbol(b + 1);
    r += m;
  }
  return r;
}

QTorusElement quantum_five_term(int a, int b) {
  const auto e = five_term_exponents(a, b);
  QTorusElement r;
  for (int t = 0; t < 5; ++t) {
    LaurentPoly c(1L);
    if (t == 3) c = parameter_symbol(a + 1);
    if (t == 4) c = parameter_symbol(b + 1);
    r += QTorusElement::weyl(e[t], c);
  }
  return r;
}

int third_index(int i, int j) { return 6 - i - j; }

void check_pair(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw std::invalid_argument("omega indices must be distinct in 1..3");
}

}  // namespace

GeodesicTriple geodesic_functions(const HoleParams& params) {
  return {specialise(five_term(0, 1), params), specialise(five_term(1, 2), params),
          specialise(five_term(2, 0), params)};
}

QuantumGeodesicTriple quantum_geodesic_functions(const HoleParams& params) {
  return {specialise(quantum_five_term(0, 1), params), specialise(quantum_five_term(1, 2), params),
          specialise(quantum_five_term(2, 0), params)};
}

LaurentPoly g_infinity() { return y_monomial(2, 2, 2) + y_monomial(-2, -2, -2); }

QTorusElement quantum_g_infinity() {
  return QTorusElement::weyl({1, 1, 1}) + QTorusElement::weyl({-1, -1, -1});
}

LaurentPoly omega(int i, int j, const HoleParams& params) {
  check_pair(i, j);
  const int k = third_index(i, j);
  return specialise(parameter_symbol(i) * parameter_symbol(j) + parameter_symbol(k) * g_infinity(), params);
}

QTorusElement quantum_omega(int i, int j, const HoleParams& params) {
  check_pair(i, j);
  const int k = third_index(i, j);
  const QTorusElement w = QTorusElement(parameter_symbol(i) * parameter_symbol(j)) +
                          parameter_symbol(k) * quantum_g_infinity();
  return specialise(w, params);
}

Omegas omegas(const HoleParams& params) { return {omega(1, 2, params), omega(2, 3, params), omega(1, 3, params)}; }

QuantumOmegas quantum_omegas(const HoleParams& params) {
  return {quantum_omega(1, 2, params), quantum_omega(2, 3, params), quantum_omega(1, 3, params)};
}

LaurentPoly central_element(const GeodesicTriple& t, const Omegas& w) {
  return central_element(t.g12, t.g23, t.g13, w.w12, w.w23, w.w13);
}

std::vector<ExactIdentity> goldman_identities(const HoleParams& params) {
  const auto t = geodesic_functions(params);
  const auto w = omegas(params);
  std::vector<ExactIdentity> out;
  out.push_back({"goldman.g12_g23", poisson_bracket(t.g12, t.g23) - (t.g12 * t.g23 - LaurentPoly(2L) * t.g13 - w.w13)});
  out.push_back({"goldman.g23_g13", poisson_bracket(t.g23, t.g13) - (t.g23 * t.g13 - LaurentPoly(2L) * t.g12 - w.w12)});
  out.push_back({"goldman.g13_g12", poisson_bracket(t.g13, t.g12) - (t.g12 * t.g13 - LaurentPoly(2L) * t.g23 - w.w23)});
  return out;
}

std::vector<ExactIdentity> casimir_identities(const HoleParams& params) {
  const auto t = geodesic_functions(params);
  const auto c = central_element(t, omegas(params));
  return {{"casimir.g12", poisson_bracket(c, t.g12)},
          {"casimir.g23", poisson_bracket(c, t.g23)},
          {"casimir.g13", poisson_bracket(c, t.g13)}};
}

ExactIdentity fricke_check(const HoleParams& params) {
  const auto t = geodesic_functions(params);
  const auto c = central_element(t, omegas(params));
  const auto rhs = specialise(fricke_value(parameter_symbol(1), parameter_symbol(2), parameter_symbol(3), g_infinity()),
                              params);
  return {"fricke", c - rhs};
}

}  // namespace d4shear::surface
