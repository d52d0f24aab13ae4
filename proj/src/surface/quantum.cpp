#include <map>
#include <tuple>

#include "d4shear/surface.hpp"

namespace d4shear::surface {

using qtorus::classical_limit;
using qtorus::commutator;
using qtorus::dagger;
using qtorus::q_shift;

int relation_half_units(QOrientation o, int h) { return o == QOrientation::literal ? h : -h; }

bool QuantumRelationsReport::all_hold() const {
  for (const auto& r : relations) {
    if (!r.holds()) return false;
  }
  for (const auto& r : hermiticity) {
    if (!r.holds()) return false;
  }
  for (const auto& r : classical_limits) {
    if (!r.holds()) return false;
  }
  return true;
}

namespace {

struct QRelationTerms {
  QTorusElement lhs, rhs;
};

// q^{-1/2} A B - q^{1/2} B A  and  (q^{-1} - q) C + (q^{-1/2} - q^{1/2}) w.
QRelationTerms q_commutation(const QTorusElement& a, const QTorusElement& b, const QTorusElement& c,
                             const QTorusElement& w, QOrientation o) {
  auto sh = [o](const QTorusElement& x, int h) { return q_shift(x, relation_half_units(o, h)); };
  return {sh(a * b, -1) - sh(b * a, 1), sh(c, -2) - sh(c, 2) + sh(w, -1) - sh(w, 1)};
}

std::array<QTorusElement, 7> casimir_monomials(const QuantumGeodesicTriple& t, const QuantumOmegas& w) {
  return {t.g12 * t.g23 * t.g13, -(t.g12 * t.g12), -(t.g23 * t.g23), -(t.g13 * t.g13),
          -(w.w12 * t.g12),      -(w.w23 * t.g23), -(w.w13 * t.g13)};
}

constexpr int kMinPower = -2;
constexpr int kPowerCount = 5;
constexpr int kColumns = 7 * kPowerCount;

using Row = std::array<BigRational, kColumns>;

int column(int monomial, int power) { return monomial * kPowerCount + (power - kMinPower); }

// Incremental row echelon form over Q.
class EchelonBasis {
 public:
  void insert(Row row) {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const int p = pivots_[b];
      if (row[p].is_zero()) continue;
      const BigRational f = row[p];
      for (int c = 0; c < kColumns; ++c) row[c] -= f * rows_[b][c];
    }
    int pivot = -1;
    for (int c = 0; c < kColumns; ++c) {
      if (!row[c].is_zero()) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) return;
    const BigRational inv = BigRational(1) / row[pivot];
    for (auto& x : row) x *= inv;
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      if (rows_[b][pivot].is_zero()) continue;
      const BigRational f = rows_[b][pivot];
      for (int c = 0; c < kColumns; ++c) rows_[b][c] -= f * row[c];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
  }

  bool annihilates(const CasimirPowers& powers) const {
    for (const auto& row : rows_) {
      BigRational s;
      for (int i = 0; i < 7; ++i) s += row[column(i, powers[i])];
      if (!s.is_zero()) return false;
    }
    return true;
  }

 private:
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

}  // namespace

QuantumRelationsReport quantum_relations_check(const QuantumGeodesicTriple& t, const QuantumOmegas& w,
                                               QOrientation orientation) {
  struct Spec {
    const char* name;
    const QTorusElement *a, *b, *c, *w;
  };
  const Spec specs[3] = {{"q_comm.g12_g23", &t.g12, &t.g23, &t.g13, &w.w13},
                         {"q_comm.g23_g13", &t.g23, &t.g13, &t.g12, &w.w12},
                         {"q_comm.g13_g12", &t.g13, &t.g12, &t.g23, &w.w23}};
  QuantumRelationsReport report;
  for (const auto& s : specs) {
    const auto terms = q_commutation(*s.a, *s.b, *s.c, *s.w, orientation);
    report.relations.push_back({s.name, terms.lhs - terms.rhs});
    report.classical_limits.push_back({std::string(s.name) + ".q1_lhs", classical_limit(terms.lhs)});
    report.classical_limits.push_back({std::string(s.name) + ".q1_rhs", classical_limit(terms.rhs)});
  }
  report.hermiticity.push_back({"dagger.g12", dagger(t.g12) - t.g12});
  report.hermiticity.push_back({"dagger.g23", dagger(t.g23) - t.g23});
  report.hermiticity.push_back({"dagger.g13", dagger(t.g13) - t.g13});
  return report;
}

QTorusElement quantum_casimir(const QuantumGeodesicTriple& t, const QuantumOmegas& w, const CasimirPowers& powers,
                              QOrientation orientation) {
  const auto mono = casimir_monomials(t, w);
  QTorusElement c;
  for (int i = 0; i < 7; ++i) c += q_shift(mono[i], relation_half_units(orientation, powers[i]));
  return c;
}

std::vector<CasimirPowers> fit_casimir_powers(const QuantumGeodesicTriple& t, const QuantumOmegas& w,
                                              QOrientation orientation) {
  const auto mono = casimir_monomials(t, w);
  const std::array<const QTorusElement*, 3> gens{&t.g12, &t.g23, &t.g13};

  // Equation rows indexed by (generator, torus exponent, q power, parameter monomial).
  using Key = std::tuple<int, std::array<int, 3>, int, exactalg::ExponentVector>;
  std::map<Key, Row> rows;
  for (int gi = 0; gi < 3; ++gi) {
    for (int i = 0; i < 7; ++i) {
      const auto comm = commutator(mono[i], *gens[gi]);
      for (int h = kMinPower; h < kMinPower + kPowerCount; ++h) {
        const int shift = relation_half_units(orientation, h);
        for (const auto& [k, coeff] : comm.terms()) {
          for (const auto& [pk, pc] : coeff.terms()) {
            rows[Key{gi, k.a, k.qh + shift, pk}][column(i, h)] += pc;
          }
        }
      }
    }
  }

  EchelonBasis basis;
  for (auto& [key, row] : rows) basis.insert(row);

  std::vector<CasimirPowers> out;
  CasimirPowers p{};
  for (int code = 0; code < 78125; ++code) {  // 5^7
    int rest = code;
    for (int i = 0; i < 7; ++i) {
      p[i] = rest % kPowerCount + kMinPower;
      rest /= kPowerCount;
    }
    if (basis.annihilates(p)) out.push_back(p);
  }
  return out;
}

namespace {

void fill_casimir(CasimirReport& r, const QuantumGeodesicTriple& t, const QuantumOmegas& w, QTorusElement c) {
  r.casimir = std::move(c);
  r.commutators = {{"casimir_q.g12", commutator(r.casimir, t.g12)},
                   {"casimir_q.g23", commutator(r.casimir, t.g23)},
                   {"casimir_q.g13", commutator(r.casimir, t.g13)}};
  r.central = true;
  for (const auto& c : r.commutators) r.central = r.central && c.holds();
  r.hermitian = dagger(r.casimir) == r.casimir;
  const LaurentPoly c12 = classical_limit(t.g12), c23 = classical_limit(t.g23), c13 = classical_limit(t.g13);
  const LaurentPoly classical = central_element(c12, c23, c13, classical_limit(w.w12), classical_limit(w.w23),
                                                classical_limit(w.w13));
  r.classical_residual = classical_limit(r.casimir) + classical;
}

}  // namespace

CasimirReport quantum_casimir_check(const QuantumGeodesicTriple& t, const QuantumOmegas& w, QOrientation orientation) {
  CasimirReport r;
  fill_casimir(r, t, w, quantum_casimir(t, w, kPrintedCasimirPowers, orientation));
  if (r.central) return r;
  r.fitted = true;
  r.fitted_powers = fit_casimir_powers(t, w, orientation);
  if (!r.fitted_powers.empty()) fill_casimir(r, t, w, quantum_casimir(t, w, r.fitted_powers.front(), orientation));
  return r;
}

}  // namespace d4shear::surface
