#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "d4shear/laurent.hpp"
#include "d4shear/qtorus.hpp"
#include "d4shear/sparse_poly.hpp"
#include "d4shear/surface.hpp"

namespace d4shear::braid {

using exactalg::BigRational;
using qtorus::QTorusElement;
using complex = std::complex<double>;

enum class Generator { b12, b23, b12_inv, b23_inv };

Generator inverse(Generator g);
std::string to_string(Generator g);

/// Freely reduced word in the braid generators. Letters act left to right:
/// "12,23" applies beta_12 first.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(const std::vector<Generator>& letters);

  /// Parses "12,23,12i" (suffix i = inverse). Empty or blank text is the
  /// identity. Throws std::invalid_argument on malformed input.
  static BraidWord parse(std::string_view text);

  /// Appends with free reduction.
  void push_back(Generator g);
  const std::vector<Generator>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  BraidWord inverse() const;
  std::string str() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Generator> letters_;
};

/// All freely reduced words of length <= max_length, shortest first.
std::vector<BraidWord> reduced_words(int max_length);

// ---------------------------------------------------------------------------
// Abstract polynomial model.

/// Monomial u^a v^b w^c r12^d r23^e r13^f.
struct AbstractMonomial {
  std::array<int, 6> e{};

  friend AbstractMonomial operator+(const AbstractMonomial& a, const AbstractMonomial& b);
  friend bool operator==(const AbstractMonomial&, const AbstractMonomial&) = default;
  friend auto operator<=>(const AbstractMonomial&, const AbstractMonomial&) = default;
};

using AbstractPoly = exactalg::SparsePoly<AbstractMonomial>;

enum class Symbol { u, v, w, r12, r23, r13 };
AbstractPoly symbol(Symbol s);
/// Total degree in u, v, w.
int generator_degree(const AbstractPoly& p);
std::string to_string(const AbstractPoly& p);

/// (G12, G23, G13) with the current omega assignment (w12, w23, w13).
template <class R>
struct Triple {
  R g12, g23, g13;
  R w12, w23, w13;

  friend bool operator==(const Triple&, const Triple&) = default;
};

using AbstractTriple = Triple<AbstractPoly>;

/// (u, w, v) = (G12, G23, G13) with omegas (r12, r23, r13).
AbstractTriple symbolic_triple();

/// Classical braid action, valid over any commutative ring.
template <class R>
Triple<R> act_classical(Generator g, const Triple<R>& t) {
  switch (g) {
    case Generator::b12:
      return {t.g12, t.g13, t.g12 * t.g13 - t.g23 - t.w23, t.w12, t.w13, t.w23};
    case Generator::b12_inv:
      return {t.g12, t.g12 * t.g23 - t.g13 - t.w13, t.g23, t.w12, t.w13, t.w23};
    case Generator::b23:
      return {t.g23 * t.g12 - t.g13 - t.w13, t.g23, t.g12, t.w13, t.w23, t.w12};
    case Generator::b23_inv:
      return {t.g13, t.g23, t.g23 * t.g13 - t.g12 - t.w12, t.w13, t.w23, t.w12};
  }
  return t;
}

template <class R>
Triple<R> act_classical(const BraidWord& word, Triple<R> t) {
  for (Generator g : word.letters()) t = act_classical(g, t);
  return t;
}

template <class R>
R central_element(const Triple<R>& t) {
  return surface::central_element(t.g12, t.g23, t.g13, t.w12, t.w23, t.w13);
}

struct AbstractIdentity {
  std::string name;
  AbstractPoly residual;  // sum of the residuals of the six slots, or a single residual
  bool holds = false;
};

/// (b12 b23)^3 = Id, C invariance under all four generators and the
/// b12^2 != Id sanity check (reported with holds = true when it differs).
std::vector<AbstractIdentity> braid_relation_check();

// ---------------------------------------------------------------------------
// Quantum action on the quantum-torus realisation.

using QuantumTriple = Triple<QTorusElement>;

QuantumTriple quantum_triple(const surface::HoleParams& params = surface::HoleParams::symbolic());

/// Which printed line of the quantum braid formula is used for the new entry.
enum class QuantumForm { first, second };

QuantumTriple act_quantum(Generator g, const QuantumTriple& t, QuantumForm form = QuantumForm::first);
QuantumTriple act_quantum(const BraidWord& word, QuantumTriple t);

/// First minus second printed form of the image of the non-trivially
/// transformed generator.
QTorusElement quantum_form_residual(Generator g, const QuantumTriple& t);
/// Same for b23 with the first line's omega coefficient as printed, q^{-1/2}.
QTorusElement printed_b23_form_residual(const QuantumTriple& t);

Triple<exactalg::LaurentPoly> classical_limit(const QuantumTriple& t);

// ---------------------------------------------------------------------------
// Shear-coordinate flips.

/// Tilde shear coordinates, boundary parameters and the petal labels
/// (labels[i] = original puncture now sitting at position i).
struct ShearState {
  std::array<complex, 3> y{};
  std::array<complex, 3> g{};
  std::array<int, 3> labels{1, 2, 3};
};

/// (G12, G23, G13, w12, w23, w13) evaluated at a state.
Triple<complex> evaluate_triple(const ShearState& s);
complex g_infinity_value(const ShearState& s);

/// The flip exactly as displayed: Y1 + log(1 + G2 e^{Y2} + e^{2Y2}),
/// Y3 - log(1 + G2 e^{-Y2} + e^{-2Y2}), -Y2, with P2 <-> P3.
/// Throws std::domain_error when a log argument is within 1e-12 of zero.
ShearState displayed_flip(const ShearState& s);

/// Flip realising b23 (log terms of the displayed flip exchanged).
ShearState flip_b23(const ShearState& s);
ShearState flip_b23_inverse(const ShearState& s);

/// Braid generator on shear coordinates via the validated realisation.
ShearState braid_shear(const ShearState& s, Generator g);
ShearState braid_shear(ShearState s, const BraidWord& word);

/// A sign variant of the displayed flip:
/// Y1'' = Y1 + s1 log(1 + G2 e^{a Y2} + e^{2a Y2}),
/// Y2'' = Y3 + s2 log(1 + G2 e^{-a Y2} + e^{-2a Y2}), Y3'' = s3 Y2.
struct FlipVariant {
  int s1 = 1, s2 = -1, s3 = -1, a = 1;
  bool is_displayed() const { return s1 == 1 && s2 == -1 && s3 == -1 && a == 1; }
  std::string str() const;
};

enum class CoordinateConvention { tilde, plain };

struct FlipCandidate {
  FlipVariant variant;
  std::array<int, 3> permutation{0, 1, 2};  // y'[i] = y''[permutation[i]]
  CoordinateConvention convention = CoordinateConvention::tilde;
};

ShearState apply_candidate(const FlipCandidate& c, const ShearState& s);

struct RealizationMatch {
  FlipCandidate candidate;
  BraidWord word;
};

struct RealizationReport {
  std::size_t samples = 0;
  std::size_t candidates_tested = 0;
  std::vector<RealizationMatch> matches;
  /// Displayed-flip residual against each word of length <= 1 (max abs
  /// difference of the six evaluated entries), at every sample.
  std::vector<std::pair<std::string, double>> displayed_residuals;
  bool displayed_matches = false;
  /// Holdout check: every matched candidate preserves C and G_inf.
  bool holdout_invariant = true;
  std::string summary;
};

/// Enumerates flip variants x label permutations x coordinate conventions x
/// words of length <= max_word, keeping candidates whose induced map on the
/// evaluated triple agrees with act_classical on every sample to `tol`.
/// The second half of `samples` (at least 20 first) is used for the holdout.
RealizationReport realization_search(const std::vector<ShearState>& samples, double tol = 1e-9, int max_word = 3);

/// Generic samples: Y with real parts in [-0.7, 0.7], G in [0, 1.9).
std::vector<ShearState> generic_shear_samples(std::uint64_t seed, std::size_t count);

}  // namespace d4shear::braid
