#include "d4shear/braid.hpp"

namespace d4shear::braid {

using qtorus::q_shift;
using surface::QOrientation;

namespace {

// q^{h/2} x with q in the orientation under which the relations hold.
QTorusElement q(int h, const QTorusElement& x) {
  return q_shift(x, surface::relation_half_units(QOrientation::reconciled, h));
}

// q^{s/2} A B - q^{s} C - q^{s/2} w, the common shape of every image.
QTorusElement image(int s, const QTorusElement& a, const QTorusElement& b, const QTorusElement& c,
                    const QTorusElement& w) {
  return q(s, a * b) - q(2 * s, c) - q(s, w);
}

struct Forms {
  QTorusElement first, second;
};

Forms new_entry(Generator g, const QuantumTriple& t) {
  switch (g) {
    case Generator::b12:
      return {image(1, t.g12, t.g13, t.g23, t.w23), image(-1, t.g13, t.g12, t.g23, t.w23)};
    case Generator::b12_inv:
      return {image(-1, t.g12, t.g23, t.g13, t.w13), image(1, t.g23, t.g12, t.g13, t.w13)};
    case Generator::b23:
      return {image(1, t.g23, t.g12, t.g13, t.w13), image(-1, t.g12, t.g23, t.g13, t.w13)};
    case Generator::b23_inv:
      return {image(-1, t.g23, t.g13, t.g12, t.w12), image(1, t.g13, t.g23, t.g12, t.w12)};
  }
  return {};
}

}  // namespace

QuantumTriple quantum_triple(const surface::HoleParams& params) {
  const auto g = surface::quantum_geodesic_functions(params);
  const auto w = surface::quantum_omegas(params);
  return {g.g12, g.g23, g.g13, w.w12, w.w23, w.w13};
}

QuantumTriple act_quantum(Generator g, const QuantumTriple& t, QuantumForm form) {
  const Forms f = new_entry(g, t);
  const QTorusElement& x = form == QuantumForm::first ? f.first : f.second;
  switch (g) {
    case Generator::b12: return {t.g12, t.g13, x, t.w12, t.w13, t.w23};
    case Generator::b12_inv: return {t.g12, x, t.g23, t.w12, t.w13, t.w23};
    case Generator::b23: return {x, t.g23, t.g12, t.w13, t.w23, t.w12};
    case Generator::b23_inv: return {t.g13, t.g23, x, t.w13, t.w23, t.w12};
  }
  return t;
}

QuantumTriple act_quantum(const BraidWord& word, QuantumTriple t) {
  for (Generator g : word.letters()) t = act_quantum(g, t);
  return t;
}

QTorusElement quantum_form_residual(Generator g, const QuantumTriple& t) {
  const Forms f = new_entry(g, t);
  return f.first - f.second;
}

QTorusElement printed_b23_form_residual(const QuantumTriple& t) {
  const QTorusElement first = q(1, t.g23 * t.g12) - q(2, t.g13) - q(-1, t.w13);
  return first - new_entry(Generator::b23, t).second;
}

Triple<exactalg::LaurentPoly> classical_limit(const QuantumTriple& t) {
  using qtorus::classical_limit;
  return {classical_limit(t.g12), classical_limit(t.g23), classical_limit(t.g13),
          classical_limit(t.w12), classical_limit(t.w23), classical_limit(t.w13)};
}

}  // namespace d4shear::braid
