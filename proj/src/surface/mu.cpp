#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "d4shear/surface.hpp"

namespace d4shear::surface {

using exactalg::evaluate;
using exactalg::EvalPoint;
using exactalg::ExponentVector;

exactalg::EvalPoint shear_eval_point(const std::array<complex, 3>& y, const std::array<complex, 3>& g) {
  return EvalPoint::from_coordinates(y, {0.0, 0.0, 0.0}, g);
}

complex phi_tilde(complex u, complex v, complex w, const std::array<complex, 4>& r) {
  return u * u + v * v + w * w - u * v * w + r[0] * u + r[1] * v + r[2] * w + r[3];
}

double phi_tilde_scale(complex u, complex v, complex w, const std::array<complex, 4>& r) {
  return std::max({std::abs(u * u), std::abs(v * v), std::abs(w * w), std::abs(u * v * w), std::abs(r[0] * u),
                   std::abs(r[1] * v), std::abs(r[2] * w), std::abs(r[3])});
}

SurfacePoint mu_eval(const std::array<complex, 3>& y, const HoleParams& params) {
  const auto g = params.values();
  const auto pt = shear_eval_point(y, g);
  const auto t = geodesic_functions(params);
  const auto w = omegas(params);
  const complex ginf = evaluate(g_infinity(), pt);

  SurfacePoint s;
  s.u = evaluate(t.g12, pt);
  s.v = evaluate(t.g13, pt);
  s.w = evaluate(t.g23, pt);
  s.r = {evaluate(w.w12, pt), evaluate(w.w13, pt), evaluate(w.w23, pt), -fricke_value(g[0], g[1], g[2], ginf)};
  s.residual = phi_tilde(s.u, s.v, s.w, s.r);
  s.scale = phi_tilde_scale(s.u, s.v, s.w, s.r);
  return s;
}

std::array<complex, 3> eg_bracket(const SurfacePoint& p) {
  return {2.0 * p.w - p.u * p.v + p.r[2], 2.0 * p.u - p.v * p.w + p.r[0], 2.0 * p.v - p.u * p.w + p.r[1]};
}

std::array<complex, 3> goldman_at(const std::array<complex, 3>& y, const HoleParams& params,
                                  const std::array<BracketPairing, 3>& pairings) {
  const auto t = geodesic_functions(params);
  const std::array<const LaurentPoly*, 3> gens{&t.g12, &t.g23, &t.g13};
  const auto pt = shear_eval_point(y, params.values());
  std::array<complex, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const auto& pr = pairings[k];
    out[k] = static_cast<double>(pr.sign) * evaluate(exactalg::poisson_bracket(*gens[pr.first], *gens[pr.second]), pt);
  }
  return out;
}

DegenerateLeaf classify_leaf(const std::array<complex, 3>& y, const HoleParams& params, double tol) {
  DegenerateLeaf leaf;
  if (params.is_symbolic()) return leaf;
  const auto g = params.values();
  const auto pt = shear_eval_point(y, g);
  leaf.casimir = fricke_value(g[0], g[1], g[2], evaluate(g_infinity(), pt));
  for (const auto& gi : g) {
    if (std::abs(gi) > tol) return leaf;
  }
  const complex s = (y[0] + y[1] + y[2]) / complex(0.0, std::numbers::pi);
  const double n = std::round(s.real());
  if (std::abs(s.imag()) > tol || std::abs(s.real() - n) > tol) return leaf;
  leaf.on_leaf = true;
  leaf.n = static_cast<long>(n);
  return leaf;
}

LaurentPoly casimir_on_leaf(long n) {
  const auto params = HoleParams::orbifold({4, 4, 4});  // G_i = 0 exactly
  const auto c = central_element(geodesic_functions(params), omegas(params));
  LaurentPoly out;
  for (const auto& [k, coeff] : c.terms()) {
    const int n3 = k.y[2];
    if (n3 % 2 != 0) throw std::logic_error("casimir_on_leaf: odd Y3 exponent");
    const long m = n3 / 2;
    ExponentVector e = k;
    e.y[0] -= n3;
    e.y[1] -= n3;
    e.y[2] = 0;
    const bool flip = ((n % 2 != 0) && (m % 2 != 0));
    out.add_term(e, flip ? -coeff : coeff);
  }
  return out;
}

}  // namespace d4shear::surface

namespace d4shear::surface {

std::array<std::vector<BracketPairing>, 3> resolve_eg_pairings(const std::vector<EgSample>& samples, double rel_tol) {
  static constexpr const char* kNames[3] = {"{u,v}", "{v,w}", "{w,u}"};
  const auto t = geodesic_functions();
  const std::array<const LaurentPoly*, 3> gens{&t.g12, &t.g23, &t.g13};
  std::array<std::array<LaurentPoly, 3>, 3> brackets;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != b) brackets[a][b] = exactalg::poisson_bracket(*gens[a], *gens[b]);
    }
  }

  std::array<std::vector<BracketPairing>, 3> out;
  for (int k = 0; k < 3; ++k) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        for (int sign : {+1, -1}) {
          bool ok = !samples.empty();
          for (const auto& smp : samples) {
            const auto point = mu_eval(smp.y, HoleParams::holes(smp.g));
            const complex eg = eg_bracket(point)[k];
            const complex gb = static_cast<double>(sign) * evaluate(brackets[a][b], shear_eval_point(smp.y, smp.g));
            const double scale = std::max({1.0, std::abs(eg), std::abs(gb), point.scale});
            if (std::abs(eg - gb) > rel_tol * scale) {
              ok = false;
              break;
            }
          }
          if (ok) out[k].push_back({kNames[k], a, b, sign});
        }
      }
    }
  }
  return out;
}

}  // namespace d4shear::surface
