#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "d4shear/braid.hpp"
#include "d4shear/laurent.hpp"
#include "d4shear/mat2.hpp"

namespace d4shear::monodromy {

using exactalg::LaurentPoly;
using complex = std::complex<double>;
using SymMat = Mat2<LaurentPoly>;
using NumMat = Mat2<complex>;

enum class PunctureType { hyperbolic, orbifold };
using PunctureTypes = std::array<PunctureType, 3>;

inline constexpr PunctureTypes kAllHyperbolic{PunctureType::hyperbolic, PunctureType::hyperbolic,
                                              PunctureType::hyperbolic};
inline constexpr PunctureTypes kAllOrbifold{PunctureType::orbifold, PunctureType::orbifold, PunctureType::orbifold};

SymMat matrix_r();  // [[1,1],[-1,0]]
SymMat matrix_l();  // -R^2
/// X_Z = [[0, -e^{Z/2}], [e^{-Z/2}, 0]] for Z = Y_index (plain) or P_index.
SymMat x_matrix_y(int index);
SymMat x_matrix_p(int index);

/// X_{Y_i} R X_{P_i} R X_{Y_i} (hyperbolic) or X_{Y_i} F^R X_{Y_i} with
/// F^R = [[G_i, 1], [-1, 0]] (orbifold).
SymMat building_block(int index, PunctureType type);

struct FuchsianTriple {
  SymMat g1, g2, g3;
};

/// gamma_1 = B_1, gamma_2 = R B_2 L, gamma_3 = L B_3 R.
FuchsianTriple build_generators(const PunctureTypes& types = kAllHyperbolic);

/// Maps a formula written in the tilde frame to the frame of the
/// matrices: for hyperbolic punctures G_i -> e^{P_i/2} + e^{-P_i/2} and
/// e^{Y~_i} -> e^{Y_i + P_i/2}; orbifold punctures are left unchanged.
LaurentPoly to_matrix_frame(const LaurentPoly& f, const PunctureTypes& types);

struct SymbolicCheck {
  std::string name;
  LaurentPoly residual;
  bool holds() const { return residual.is_zero(); }
};

/// R^3 = -Id, L = -R^2, the block identity and det gamma_i = 1.
std::vector<SymbolicCheck> generator_checks(const PunctureTypes& types = kAllHyperbolic);

/// -Tr(gamma_i gamma_j) against the five-term formulas, -Tr(gamma_1 gamma_2
/// gamma_3) against G_inf and -Tr(gamma_i) against G_i.
std::vector<SymbolicCheck> trace_geodesic_check(const PunctureTypes& types = kAllHyperbolic);

/// Skein residuals on words in the gammas.
std::vector<SymbolicCheck> symbolic_skein_checks(const PunctureTypes& types = kAllHyperbolic);

struct TildeVariant {
  std::string name;
  int sign = 1;             // G~13 = sign * Tr(g1 g2 g3 g2^{-1})
  bool pair_with_g23 = false;  // product G12 G23 instead of G12 G13
  LaurentPoly product_residual;
  LaurentPoly bracket_residual;
  bool holds() const { return product_residual.is_zero() && bracket_residual.is_zero(); }
};

/// The four index and sign variants of the doubled-loop identity
/// G12 G13 = G~13 + G13 + w13 together with {G12, G13} = G~13 - G13.
std::vector<TildeVariant> tilde_g13_checks(const PunctureTypes& types = kAllHyperbolic);

// ---------------------------------------------------------------------------
// Numeric monodromy.

struct MonodromyTriple {
  NumMat m1, m2, m3;
  NumMat m_inf() const;  // (M1 M2 M3)^{-1}
  const NumMat& at(int i) const;
};

/// G_i = -Tr M_i, G_ij = -Tr(M_i M_j), G_inf = -Tr M_inf and the omegas.
braid::Triple<complex> trace_triple(const MonodromyTriple& m);
std::array<complex, 4> boundary_traces(const MonodromyTriple& m);  // G1, G2, G3, G_inf

/// Deterministic random triple. With `theta`, each M_j is a random
/// conjugate of diag(e^{i pi theta_j}, e^{-i pi theta_j}).
MonodromyTriple sample_triple(std::uint64_t seed, const std::optional<std::array<double, 3>>& theta = std::nullopt);
NumMat sample_sl2(std::uint64_t seed);

/// {-Tr(M_i M_j), -Tr(M_k M_l)} by literal contraction of the quadratic
/// bracket with the exchange matrix. Indices are 1-based with i != j, k != l.
complex ks_bracket(const MonodromyTriple& m, std::array<int, 2> first, std::array<int, 2> second);

/// Tr(M1 M2 M3 M2 - M1 M2 M2 M3).
complex ks_trace_difference(const MonodromyTriple& m);

MonodromyTriple braid_matrices(const MonodromyTriple& m, braid::Generator g);
MonodromyTriple braid_matrices(MonodromyTriple m, const braid::BraidWord& word);

nlohmann::json to_json(const NumMat& m);
nlohmann::json to_json(const MonodromyTriple& m);
NumMat num_mat_from_json(const nlohmann::json& j);

}  // namespace d4shear::monodromy
