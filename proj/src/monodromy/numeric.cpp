#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "d4shear/monodromy.hpp"
#include "d4shear/parallel.hpp"

namespace d4shear::monodromy {

NumMat MonodromyTriple::m_inf() const { return (m1 * m2 * m3).adjugate(); }

const NumMat& MonodromyTriple::at(int i) const {
  switch (i) {
    case 1: return m1;
    case 2: return m2;
    case 3: return m3;
  }
  throw std::out_of_range("monodromy index must be 1..3");
}

std::array<complex, 4> boundary_traces(const MonodromyTriple& m) {
  return {-m.m1.trace(), -m.m2.trace(), -m.m3.trace(), -m.m_inf().trace()};
}

braid::Triple<complex> trace_triple(const MonodromyTriple& m) {
  const auto [g1, g2, g3, ginf] = boundary_traces(m);
  return {-(m.m1 * m.m2).trace(), -(m.m2 * m.m3).trace(), -(m.m1 * m.m3).trace(),
          g1 * g2 + g3 * ginf,   g2 * g3 + g1 * ginf,   g1 * g3 + g2 * ginf};
}

NumMat sample_sl2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const complex a(n(rng), n(rng)), b(n(rng), n(rng)), c(n(rng), n(rng)), d(n(rng), n(rng));
    const complex det = a * d - b * c;
    if (std::abs(det) < 1e-3) continue;
    const complex s = std::sqrt(det);
    const NumMat m(a / s, b / s, c / s, d / s);
    bool bounded = true;
    for (const auto& x : m.e) bounded = bounded && std::abs(x) <= 4.0;
    if (bounded) return m;
  }
}

MonodromyTriple sample_triple(std::uint64_t seed, const std::optional<std::array<double, 3>>& theta) {
  MonodromyTriple m;
  NumMat* slots[3] = {&m.m1, &m.m2, &m.m3};
  for (int j = 0; j < 3; ++j) {
    const NumMat p = sample_sl2(par::sample_seed(seed, static_cast<std::uint64_t>(j)));
    if (!theta) {
      *slots[j] = p;
      continue;
    }
    const complex e = std::exp(complex(0.0, std::numbers::pi * (*theta)[j]));
    *slots[j] = p * NumMat(e, 0.0, 0.0, 1.0 / e) * p.adjugate();
  }
  return m;
}

MonodromyTriple braid_matrices(const MonodromyTriple& m, braid::Generator g) {
  using braid::Generator;
  switch (g) {
    case Generator::b12: return {m.m1 * m.m2 * m.m1.adjugate(), m.m1, m.m3};
    case Generator::b12_inv: return {m.m2, m.m2.adjugate() * m.m1 * m.m2, m.m3};
    case Generator::b23: return {m.m1, m.m2 * m.m3 * m.m2.adjugate(), m.m2};
    case Generator::b23_inv: return {m.m1, m.m3, m.m3.adjugate() * m.m2 * m.m3};
  }
  return m;
}

MonodromyTriple braid_matrices(MonodromyTriple m, const braid::BraidWord& word) {
  for (auto g : word.letters()) m = braid_matrices(m, g);
  return m;
}

nlohmann::json to_json(const NumMat& m) {
  auto c = [](complex z) { return nlohmann::json::array({z.real(), z.imag()}); };
  return nlohmann::json::array({nlohmann::json::array({c(m.e[0]), c(m.e[1])}),
                                nlohmann::json::array({c(m.e[2]), c(m.e[3])})});
}

nlohmann::json to_json(const MonodromyTriple& m) {
  return {{"M1", to_json(m.m1)}, {"M2", to_json(m.m2)}, {"M3", to_json(m.m3)}, {"M_inf", to_json(m.m_inf())}};
}

NumMat num_mat_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("matrix JSON must be 2 rows");
  NumMat m;
  for (int r = 0; r < 2; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != 2) throw std::invalid_argument("matrix row must have 2 entries");
    for (int c = 0; c < 2; ++c) {
      const auto& z = row[c];
      if (!z.is_array() || z.size() != 2) throw std::invalid_argument("complex entry must be [re, im]");
      m(r, c) = complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

}  // namespace d4shear::monodromy
