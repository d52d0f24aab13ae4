#include <sstream>
#include <stdexcept>

#include "d4shear/braid.hpp"

namespace d4shear::braid {

AbstractMonomial operator+(const AbstractMonomial& a, const AbstractMonomial& b) {
  AbstractMonomial r;
  for (int i = 0; i < 6; ++i) {
    if (__builtin_add_overflow(a.e[i], b.e[i], &r.e[i])) throw std::overflow_error("abstract monomial overflow");
  }
  return r;
}

AbstractPoly symbol(Symbol s) {
  AbstractMonomial m;
  m.e[static_cast<int>(s)] = 1;
  return AbstractPoly::monomial(m);
}

int generator_degree(const AbstractPoly& p) {
  int d = 0;
  for (const auto& [k, c] : p.terms()) d = std::max(d, k.e[0] + k.e[1] + k.e[2]);
  return d;
}

std::string to_string(const AbstractPoly& p) {
  static constexpr const char* kNames[6] = {"u", "v", "w", "r12", "r23", "r13"};
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool unit = k == AbstractMonomial{};
    std::string coeff = c.is_integer() ? c.numerator_str() : c.str();
    if (!unit && coeff == "1") coeff.clear();
    if (!unit && coeff == "-1") coeff = "-";
    os << coeff;
    bool sep = !coeff.empty() && coeff != "-";
    for (int i = 0; i < 6; ++i) {
      if (k.e[i] == 0) continue;
      if (sep) os << "*";
      sep = true;
      os << kNames[i];
      if (k.e[i] > 1) os << "^" << k.e[i];
    }
  }
  return os.str();
}

AbstractTriple symbolic_triple() {
  return {symbol(Symbol::u), symbol(Symbol::w), symbol(Symbol::v),
          symbol(Symbol::r12), symbol(Symbol::r23), symbol(Symbol::r13)};
}

namespace {

AbstractPoly slot_residual(const AbstractTriple& a, const AbstractTriple& b) {
  // Slots are compared one by one; the residual reported is the first
  // nonzero slot difference.
  const AbstractPoly diffs[6] = {a.g12 - b.g12, a.g23 - b.g23, a.g13 - b.g13,
                                 a.w12 - b.w12, a.w23 - b.w23, a.w13 - b.w13};
  for (const auto& d : diffs) {
    if (!d.is_zero()) return d;
  }
  return {};
}

}  // namespace

std::vector<AbstractIdentity> braid_relation_check() {
  const AbstractTriple t = symbolic_triple();
  std::vector<AbstractIdentity> out;

  const BraidWord hexagon = BraidWord::parse("12,23,12,23,12,23");
  const AbstractPoly rel = slot_residual(act_classical(hexagon, t), t);
  out.push_back({"braid.relation", rel, rel.is_zero()});

  const AbstractPoly c = central_element(t);
  for (Generator g : {Generator::b12, Generator::b23, Generator::b12_inv, Generator::b23_inv}) {
    const AbstractPoly r = central_element(act_classical(g, t)) - c;
    out.push_back({"braid.casimir_invariance." + to_string(g), r, r.is_zero()});
  }
  for (Generator g : {Generator::b12, Generator::b23, Generator::b12_inv, Generator::b23_inv}) {
    const AbstractPoly r = slot_residual(act_classical(inverse(g), act_classical(g, t)), t);
    out.push_back({"braid.inverse." + to_string(g), r, r.is_zero()});
  }

  const AbstractPoly sq = slot_residual(act_classical(Generator::b12, act_classical(Generator::b12, t)), t);
  out.push_back({"braid.square_is_not_identity", sq, !sq.is_zero()});
  return out;
}

}  // namespace d4shear::braid
