#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "d4shear/laurent.hpp"
#include "d4shear/qtorus.hpp"

namespace d4shear::surface {

using exactalg::BigRational;
using exactalg::LaurentPoly;
using qtorus::QTorusElement;
using complex = std::complex<double>;

enum class PunctureKind { hole, orbifold };

/// One of the three punctures carrying a geodesic parameter G_i.
struct Puncture {
  PunctureKind kind = PunctureKind::hole;
  std::optional<complex> value;  // empty: symbolic G_i
  int order = 0;                 // orbifold order k >= 3
};

/// 2 cos(2 pi / k). Orders below 3 are rejected (k = 2 needs separate
/// treatment and gives G = -2).
double orbifold_parameter(int order);

/// Exact value of 2cos(2pi/k) when it is rational (k = 3, 4, 6).
std::optional<BigRational> exact_orbifold_parameter(int order);

class HoleParams {
 public:
  /// Three holes with indeterminate G_1, G_2, G_3.
  static HoleParams symbolic();
  /// Three holes with the given boundary traces.
  static HoleParams holes(const std::array<complex, 3>& g);
  /// Three orbifold points of the given orders.
  static HoleParams orbifold(const std::array<int, 3>& orders);
  static HoleParams mixed(const std::array<Puncture, 3>& punctures);

  const Puncture& puncture(int i) const { return punctures_.at(static_cast<std::size_t>(i - 1)); }
  bool is_symbolic() const;
  /// Numeric G values; throws std::logic_error if any puncture is symbolic.
  std::array<complex, 3> values() const;
  /// Exact value of G_i when known as a rational.
  std::optional<BigRational> exact_value(int i) const;

 private:
  std::array<Puncture, 3> punctures_{};
};

/// The three generators G_{1,2}, G_{2,3}, G_{1,3} as Laurent polynomials in
/// the (tilde) shear coordinates, even y sublattice.
struct GeodesicTriple {
  LaurentPoly g12, g23, g13;
};

struct QuantumGeodesicTriple {
  QTorusElement g12, g23, g13;
};

/// omega_{12}, omega_{23}, omega_{13} of a classical triple.
struct Omegas {
  LaurentPoly w12, w23, w13;
};

struct QuantumOmegas {
  QTorusElement w12, w23, w13;
};

/// Five-term geodesic functions. Parameters with an exact rational value
/// (orbifold orders 3, 4, 6) are specialised; all others stay symbolic.
GeodesicTriple geodesic_functions(const HoleParams& params = HoleParams::symbolic());
QuantumGeodesicTriple quantum_geodesic_functions(const HoleParams& params = HoleParams::symbolic());

/// G_inf = e^{Y1+Y2+Y3} + e^{-Y1-Y2-Y3}.
LaurentPoly g_infinity();
QTorusElement quantum_g_infinity();

/// omega_{ij} = G_i G_j + G_k G_inf, k != i, j. Indices are unordered.
LaurentPoly omega(int i, int j, const HoleParams& params = HoleParams::symbolic());
QTorusElement quantum_omega(int i, int j, const HoleParams& params = HoleParams::symbolic());
Omegas omegas(const HoleParams& params = HoleParams::symbolic());
QuantumOmegas quantum_omegas(const HoleParams& params = HoleParams::symbolic());

/// C = G12^2 + G23^2 + G13^2 - G12 G23 G13 + G12 w12 + G23 w23 + G13 w13.
/// Generic over the coefficient ring (LaurentPoly or complex).
template <class T>
T central_element(const T& g12, const T& g23, const T& g13, const T& w12, const T& w23, const T& w13) {
  return g12 * g12 + g23 * g23 + g13 * g13 - g12 * g23 * g13 + g12 * w12 + g23 * w23 + g13 * w13;
}
LaurentPoly central_element(const GeodesicTriple& t, const Omegas& w);

/// 4 - G1 G2 G3 G_inf - G1^2 - G2^2 - G3^2 - G_inf^2, with numeric G_i.
template <class T>
T fricke_value(const T& g1, const T& g2, const T& g3, const T& ginf) {
  return T(4) - g1 * g2 * g3 * ginf - g1 * g1 - g2 * g2 - g3 * g3 - ginf * ginf;
}

struct ExactIdentity {
  std::string name;
  LaurentPoly residual;
  bool holds() const { return residual.is_zero(); }
};

/// The three Goldman bracket relations among G12, G23, G13.
std::vector<ExactIdentity> goldman_identities(const HoleParams& params = HoleParams::symbolic());
/// {C, G_ij} = 0 for the three generators.
std::vector<ExactIdentity> casimir_identities(const HoleParams& params = HoleParams::symbolic());
/// C minus the Fricke right-hand side.
ExactIdentity fricke_check(const HoleParams& params = HoleParams::symbolic());

/// Cubic-surface point with the deformation parameters.
struct SurfacePoint {
  complex u, v, w;
  std::array<complex, 4> r;
  complex residual;   // phi~(u,v,w)
  double scale = 1.0; // largest monomial magnitude in phi~, for relative tolerances
};

/// u^2 + v^2 + w^2 - uvw + r1 u + r2 v + r3 w + r4.
complex phi_tilde(complex u, complex v, complex w, const std::array<complex, 4>& r);
double phi_tilde_scale(complex u, complex v, complex w, const std::array<complex, 4>& r);

/// mu: (Y1,Y2,Y3) -> (u,v,w) = (G12, G13, G23) with r = (w12, w13, w23, r4),
/// r4 = -4 + G1G2G3G_inf + G1^2 + G2^2 + G3^2 + G_inf^2. Y are the tilde
/// coordinates (equal to Y for orbifold points).
SurfacePoint mu_eval(const std::array<complex, 3>& y, const HoleParams& params);

/// Values of ({u,v}, {v,w}, {w,u}) = (d phi/dw, d phi/du, d phi/dv).
std::array<complex, 3> eg_bracket(const SurfacePoint& point);

/// Evaluation point for the exactalg kernel: Y in the y slots, G_i values.
exactalg::EvalPoint shear_eval_point(const std::array<complex, 3>& y, const std::array<complex, 3>& g);

/// Pairing between EG partials and Goldman brackets: {u,v} <-> sign * {G_a, G_b}.
struct BracketPairing {
  const char* eg_name;
  int first;   // 0 = G12, 1 = G23, 2 = G13
  int second;
  int sign;
};

/// Goldman brackets of the EG coordinates at a point, in the order
/// ({u,v}, {v,w}, {w,u}) given by `pairings`.
std::array<complex, 3> goldman_at(const std::array<complex, 3>& y, const HoleParams& params,
                                  const std::array<BracketPairing, 3>& pairings);

struct EgSample {
  std::array<complex, 3> y;
  std::array<complex, 3> g;
};

/// For each EG partial, every (ordered generator pair, sign) whose evaluated
/// Goldman bracket matches it on all samples to relative tolerance.
std::array<std::vector<BracketPairing>, 3> resolve_eg_pairings(const std::vector<EgSample>& samples, double rel_tol);

struct DegenerateLeaf {
  bool on_leaf = false;
  long n = 0;             // Y1+Y2+Y3 = i n pi
  complex casimir = 0.0;  // C evaluated at the point
};

/// Detects G_i = 0 and Y1+Y2+Y3 in i pi Z (within tol).
DegenerateLeaf classify_leaf(const std::array<complex, 3>& y, const HoleParams& params, double tol = 1e-9);

/// C with G_i = 0 restricted exactly to the leaf Y1+Y2+Y3 = i n pi, by
/// substituting e^{Y3} = (-1)^n e^{-Y1-Y2}. The result is a constant.
LaurentPoly casimir_on_leaf(long n);

// ---------------------------------------------------------------------------
// Quantum relations.

/// Which q the printed relations refer to. `literal`: the torus q itself.
/// `reconciled`: q^{-1}, the orientation under which the relations hold.
enum class QOrientation { literal, reconciled };

/// Torus half-units for q^{h/2} written in the relations' convention.
int relation_half_units(QOrientation o, int h);

struct QuantumIdentity {
  std::string name;
  QTorusElement residual;
  bool holds() const { return residual.is_zero(); }
};

struct QuantumRelationsReport {
  std::vector<QuantumIdentity> relations;      // three q-commutation relations
  std::vector<QuantumIdentity> hermiticity;    // dagger(G_ij) - G_ij
  std::vector<ExactIdentity> classical_limits; // q -> 1 images of the relations
  bool all_hold() const;
};

QuantumRelationsReport quantum_relations_check(const QuantumGeodesicTriple& t, const QuantumOmegas& w,
                                               QOrientation orientation = QOrientation::reconciled);

/// Powers of q^{1/2} (relations' convention) multiplying the seven terms
/// of the quantum Casimir: G12G23G13, G12^2, G23^2, G13^2, w12G12, w23G23, w13G13.
using CasimirPowers = std::array<int, 7>;
inline constexpr CasimirPowers kPrintedCasimirPowers{-1, -2, 2, -2, -1, 1, -1};

QTorusElement quantum_casimir(const QuantumGeodesicTriple& t, const QuantumOmegas& w, const CasimirPowers& powers,
                              QOrientation orientation);

/// All single-power assignments (entries in -2..2) making the Casimir ansatz
/// central, found by solving the linear system [C, G_ij] = 0 over Q.
std::vector<CasimirPowers> fit_casimir_powers(const QuantumGeodesicTriple& t, const QuantumOmegas& w,
                                              QOrientation orientation);

struct CasimirReport {
  QTorusElement casimir;
  std::vector<QuantumIdentity> commutators;  // [C, G_ij]
  bool central = false;
  bool hermitian = false;
  /// classical_limit(C^hbar) + C; zero when the q = 1 image is -C.
  LaurentPoly classical_residual;
  bool fitted = false;
  std::vector<CasimirPowers> fitted_powers;
};

/// Builds the printed Casimir; if it is not central runs the fit and
/// reports the fitted Casimir instead.
CasimirReport quantum_casimir_check(const QuantumGeodesicTriple& t, const QuantumOmegas& w,
                                    QOrientation orientation = QOrientation::reconciled);

}  // namespace d4shear::surface
