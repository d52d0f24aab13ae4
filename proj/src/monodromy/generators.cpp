#include <stdexcept>

#include "d4shear/monodromy.hpp"
#include "d4shear/surface.hpp"

namespace d4shear::monodromy {

using exactalg::ExponentVector;
using exactalg::parameter_symbol;

namespace {

LaurentPoly half_y(int index, int sign) {
  std::array<int, 3> y{};
  y[index - 1] = sign;
  return LaurentPoly::monomial(ExponentVector(y));
}

LaurentPoly half_p(int index, int sign) {
  std::array<int, 3> p{};
  p[index - 1] = sign;
  return LaurentPoly::monomial(ExponentVector({}, p));
}

SymMat x_matrix(const LaurentPoly& up, const LaurentPoly& down) { return SymMat(0L, -up, down, 0L); }

// First nonzero entry of a matrix difference; zero iff the matrices agree.
LaurentPoly first_nonzero(const SymMat& d) {
  for (const auto& x : d.e) {
    if (!x.is_zero()) return x;
  }
  return {};
}

void check_index(int index) {
  if (index < 1 || index > 3) throw std::out_of_range("puncture index must be 1..3");
}

}  // namespace

SymMat matrix_r() { return SymMat(1L, 1L, -1L, 0L); }
SymMat matrix_l() { return -(matrix_r() * matrix_r()); }

SymMat x_matrix_y(int index) {
  check_index(index);
  return x_matrix(half_y(index, 1), half_y(index, -1));
}

SymMat x_matrix_p(int index) {
  check_index(index);
  return x_matrix(half_p(index, 1), half_p(index, -1));
}

SymMat building_block(int index, PunctureType type) {
  const SymMat x = x_matrix_y(index);
  if (type == PunctureType::hyperbolic) return x * matrix_r() * x_matrix_p(index) * matrix_r() * x;
  const SymMat f(parameter_symbol(index), 1L, -1L, 0L);
  return x * f * x;
}

FuchsianTriple build_generators(const PunctureTypes& types) {
  const SymMat r = matrix_r(), l = matrix_l();
  return {building_block(1, types[0]), r * building_block(2, types[1]) * l, l * building_block(3, types[2]) * r};
}

LaurentPoly to_matrix_frame(const LaurentPoly& f, const PunctureTypes& types) {
  LaurentPoly out;
  for (const auto& [k, c] : f.terms()) {
    ExponentVector bare = k;
    LaurentPoly factor(1L);
    for (int i = 0; i < 3; ++i) {
      if (types[i] != PunctureType::hyperbolic) continue;
      if (bare.y[i] % 2 != 0) throw std::domain_error("to_matrix_frame: odd Y half-unit exponent");
      bare.p[i] += bare.y[i] / 2;
      factor *= exactalg::pow(half_p(i + 1, 1) + half_p(i + 1, -1), static_cast<unsigned>(bare.g[i]));
      bare.g[i] = 0;
    }
    out += LaurentPoly::monomial(bare, c) * factor;
  }
  return out;
}

std::vector<SymbolicCheck> generator_checks(const PunctureTypes& types) {
  std::vector<SymbolicCheck> out;
  const SymMat r = matrix_r();
  const SymMat r3 = r * r * r;
  out.push_back({"matrix.r_cubed", first_nonzero(r3 + SymMat::identity())});
  out.push_back({"matrix.l_equals_minus_r_squared", first_nonzero(matrix_l() + r * r)});

  for (int i = 1; i <= 3; ++i) {
    const SymMat b = building_block(i, types[i - 1]);
    SymMat expected;
    if (types[i - 1] == PunctureType::hyperbolic) {
      // [[0, -e^{Y+P/2}], [e^{-Y-P/2}, -(e^{P/2}+e^{-P/2})]]
      std::array<int, 3> up{}, down{};
      up[i - 1] = 2;
      down[i - 1] = -2;
      std::array<int, 3> pu{}, pd{};
      pu[i - 1] = 1;
      pd[i - 1] = -1;
      expected = SymMat(0L, -LaurentPoly::monomial(ExponentVector(up, pu)), LaurentPoly::monomial(ExponentVector(down, pd)),
                        -(half_p(i, 1) + half_p(i, -1)));
    } else {
      expected = SymMat(0L, -half_y(i, 2), half_y(i, -2), -parameter_symbol(i));
    }
    out.push_back({"matrix.block_" + std::to_string(i), first_nonzero(b - expected)});
  }
  const auto g = build_generators(types);
  out.push_back({"matrix.det_gamma1", g.g1.det() - LaurentPoly(1L)});
  out.push_back({"matrix.det_gamma2", g.g2.det() - LaurentPoly(1L)});
  out.push_back({"matrix.det_gamma3", g.g3.det() - LaurentPoly(1L)});
  return out;
}

std::vector<SymbolicCheck> trace_geodesic_check(const PunctureTypes& types) {
  const auto g = build_generators(types);
  const auto t = surface::geodesic_functions();
  auto frame = [&](const LaurentPoly& f) { return to_matrix_frame(f, types); };
  auto neg_tr = [](const SymMat& m) { return -m.trace(); };
  return {
      {"trace.g12", neg_tr(g.g1 * g.g2) - frame(t.g12)},
      {"trace.g23", neg_tr(g.g2 * g.g3) - frame(t.g23)},
      {"trace.g13", neg_tr(g.g1 * g.g3) - frame(t.g13)},
      {"trace.g_inf", neg_tr(g.g1 * g.g2 * g.g3) - frame(surface::g_infinity())},
      {"trace.g1", neg_tr(g.g1) - frame(parameter_symbol(1))},
      {"trace.g2", neg_tr(g.g2) - frame(parameter_symbol(2))},
      {"trace.g3", neg_tr(g.g3) - frame(parameter_symbol(3))},
  };
}

std::vector<SymbolicCheck> symbolic_skein_checks(const PunctureTypes& types) {
  const auto g = build_generators(types);
  return {
      {"skein.g1_g2", skein_residual(g.g1, g.g2)},
      {"skein.g2_g3", skein_residual(g.g2, g.g3)},
      {"skein.g1g2_g3", skein_residual(g.g1 * g.g2, g.g3)},
      {"skein.g1_g2g3", skein_residual(g.g1, g.g2 * g.g3)},
  };
}

std::vector<TildeVariant> tilde_g13_checks(const PunctureTypes& types) {
  const auto g = build_generators(types);
  const LaurentPoly g12 = -(g.g1 * g.g2).trace();
  const LaurentPoly g23 = -(g.g2 * g.g3).trace();
  const LaurentPoly g13 = -(g.g1 * g.g3).trace();
  const LaurentPoly w13 = to_matrix_frame(surface::omega(1, 3), types);
  const LaurentPoly doubled = (g.g1 * g.g2 * g.g3 * g.g2.adjugate()).trace();

  std::vector<TildeVariant> out;
  for (bool with_g23 : {false, true}) {
    for (int sign : {1, -1}) {
      TildeVariant v;
      v.sign = sign;
      v.pair_with_g23 = with_g23;
      v.name = std::string(with_g23 ? "pair_g12_g23" : "pair_g12_g13") + (sign > 0 ? ".plus_trace" : ".minus_trace");
      const LaurentPoly tilde = exactalg::BigRational(sign) * doubled;
      const LaurentPoly& partner = with_g23 ? g23 : g13;
      v.product_residual = g12 * partner - (tilde + g13 + w13);
      v.bracket_residual = exactalg::poisson_bracket(g12, partner) - (tilde - g13);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace d4shear::monodromy
