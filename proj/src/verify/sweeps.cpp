#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "d4shear/braid.hpp"
#include "d4shear/eg_dictionary.hpp"
#include "d4shear/monodromy.hpp"
#include "d4shear/report.hpp"
#include "d4shear/surface.hpp"

namespace d4shear::verify {

namespace {

using complex = std::complex<double>;

double rel(complex a, complex b, double hint = 0.0) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b), hint});
}

double rel(const braid::Triple<complex>& a, const braid::Triple<complex>& b) {
  return std::max({rel(a.g12, b.g12), rel(a.g23, b.g23), rel(a.g13, b.g13), rel(a.w12, b.w12), rel(a.w23, b.w23),
                   rel(a.w13, b.w13)});
}

template <class F>
SweepResult sweep(std::size_t n, par::Execution exec, F&& per_sample) {
  const auto residuals = par::map_indices<double>(n, exec, per_sample);
  SweepResult r;
  r.samples = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (residuals[i] > r.max_residual || std::isnan(residuals[i])) {
      r.max_residual = std::isnan(residuals[i]) ? INFINITY : residuals[i];
      r.worst_index = i;
    }
  }
  return r;
}

struct SurfaceSample {
  std::array<complex, 3> y;
  std::array<complex, 3> g;
};

SurfaceSample surface_sample(std::uint64_t seed, std::size_t i) {
  auto rng = par::sample_rng(seed, i);
  std::uniform_real_distribution<double> part(-1.0, 1.0), g(0.0, 2.0);
  SurfaceSample s;
  for (auto& y : s.y) {
    const double re = part(rng);
    y = complex(re, part(rng));
  }
  for (auto& x : s.g) x = complex(g(rng), 0.0);
  return s;
}

monodromy::MonodromyTriple triple_sample(std::uint64_t seed, std::size_t i) {
  return monodromy::sample_triple(par::sample_seed(seed, i));
}

constexpr braid::Generator kGenerators[4] = {braid::Generator::b12, braid::Generator::b23, braid::Generator::b12_inv,
                                             braid::Generator::b23_inv};

}  // namespace

SweepResult sweep_cubic_membership(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    const auto s = surface_sample(seed, i);
    const auto p = surface::mu_eval(s.y, surface::HoleParams::holes(s.g));
    return std::abs(p.residual) / (1.0 + p.scale);
  });
}

SweepResult sweep_eg_agreement(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    const auto s = surface_sample(seed, i);
    const auto params = surface::HoleParams::holes(s.g);
    const auto p = surface::mu_eval(s.y, params);
    const auto eg = surface::eg_bracket(p);
    const auto gb = surface::goldman_at(s.y, params, surface::kEgPairings);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, rel(eg[k], gb[k], p.scale));
    return worst;
  });
}

SweepResult sweep_ks_bracket(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    const auto m = triple_sample(seed, i);
    const auto t = monodromy::trace_triple(m);
    const complex b1 = monodromy::ks_bracket(m, {1, 2}, {2, 3});
    const complex b2 = monodromy::ks_bracket(m, {2, 3}, {1, 3});
    const complex b3 = monodromy::ks_bracket(m, {1, 3}, {1, 2});
    return std::max({rel(b1, t.g12 * t.g23 - 2.0 * t.g13 - t.w13, std::abs(t.g12 * t.g23)),
                     rel(b2, t.g23 * t.g13 - 2.0 * t.g12 - t.w12, std::abs(t.g23 * t.g13)),
                     rel(b3, t.g12 * t.g13 - 2.0 * t.g23 - t.w23, std::abs(t.g12 * t.g13)),
                     rel(b1, monodromy::ks_trace_difference(m), std::abs(t.g12 * t.g23))});
  });
}

SweepResult sweep_ks_antisymmetry(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    const auto m = triple_sample(seed, i);
    const complex a = monodromy::ks_bracket(m, {1, 2}, {2, 3});
    const complex b = monodromy::ks_bracket(m, {2, 3}, {1, 2});
    return rel(a, -b);
  });
}

SweepResult sweep_skein(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    const auto a = monodromy::sample_sl2(par::sample_seed(seed, 2 * i));
    const auto b = monodromy::sample_sl2(par::sample_seed(seed, 2 * i + 1));
    return std::abs(monodromy::skein_residual(a, b));
  });
}

SweepResult sweep_matrix_braid(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    const auto m = triple_sample(seed, i);
    const auto t = monodromy::trace_triple(m);
    double worst = 0.0;
    for (auto g : kGenerators) {
      worst = std::max(worst, rel(monodromy::trace_triple(monodromy::braid_matrices(m, g)), braid::act_classical(g, t)));
    }
    return worst;
  });
}

SweepResult sweep_m_inf_trace(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    const auto m = triple_sample(seed, i);
    const complex before = m.m_inf().trace();
    double worst = 0.0;
    for (auto g : kGenerators) worst = std::max(worst, rel(monodromy::braid_matrices(m, g).m_inf().trace(), before));
    return worst;
  });
}

SweepResult sweep_displayed_flip_invariants(std::uint64_t seed, std::size_t n, par::Execution exec) {
  const auto samples = braid::generic_shear_samples(seed, n);
  return sweep(n, exec, [&](std::size_t i) {
    const auto& s = samples[i];
    const auto after = braid::displayed_flip(s);
    const auto tb = braid::evaluate_triple(s), ta = braid::evaluate_triple(after);
    return std::max(rel(braid::g_infinity_value(s), braid::g_infinity_value(after)),
                    rel(braid::central_element(tb), braid::central_element(ta)));
  });
}

SweepResult sweep_braid_shear(std::uint64_t seed, std::size_t n, par::Execution exec) {
  const auto samples = braid::generic_shear_samples(seed, n);
  return sweep(n, exec, [&](std::size_t i) {
    const auto& s = samples[i];
    const auto t = braid::evaluate_triple(s);
    double worst = 0.0;
    for (auto g : kGenerators) {
      worst = std::max(worst, rel(braid::evaluate_triple(braid::braid_shear(s, g)), braid::act_classical(g, t)));
    }
    return worst;
  });
}

SweepResult sweep_constrained_traces(std::uint64_t seed, std::size_t n, par::Execution exec) {
  return sweep(n, exec, [&](std::size_t i) {
    auto rng = par::sample_rng(seed ^ 0x7468657461ULL, i);
    std::uniform_real_distribution<double> th(0.0, 1.0);
    std::array<double, 3> theta{th(rng), th(rng), th(rng)};
    const auto m = monodromy::sample_triple(par::sample_seed(seed, i), theta);
    double worst = 0.0;
    for (int j = 1; j <= 3; ++j) {
      worst = std::max(worst, std::abs(m.at(j).trace() - 2.0 * std::cos(std::numbers::pi * theta[j - 1])));
    }
    return worst;
  });
}

}  // namespace d4shear::verify
