#include "d4shear/qtorus.hpp"

#include <stdexcept>

#include "d4shear/laurent_json.hpp"

namespace d4shear::qtorus {

namespace {

void require_parameter_only(const ParamPoly& c) {
  for (const auto& [k, v] : c.terms()) {
    if (k.y != std::array<int, 3>{} || k.p != std::array<int, 3>{}) {
      throw std::invalid_argument("quantum torus coefficients must be polynomials in G_i only");
    }
  }
}

}  // namespace

QTorusElement::QTorusElement(const ParamPoly& constant) {
  require_parameter_only(constant);
  if (!constant.is_zero()) terms_.emplace(QExponent{}, constant);
}

QTorusElement QTorusElement::weyl(std::array<int, 3> a, const ParamPoly& coeff) {
  require_parameter_only(coeff);
  QTorusElement r;
  r.add_term(QExponent{a, 0}, coeff);
  return r;
}

void QTorusElement::add_term(const QExponent& key, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QTorusElement& QTorusElement::operator+=(const QTorusElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QTorusElement& QTorusElement::operator-=(const QTorusElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QTorusElement QTorusElement::operator-() const {
  QTorusElement r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

QTorusElement operator*(const QTorusElement& a, const QTorusElement& b) {
  QTorusElement r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      QExponent k;
      for (int i = 0; i < 3; ++i) k.a[i] = ka.a[i] + kb.a[i];
      k.qh = ka.qh + kb.qh - exactalg::lattice_form(ka.a, kb.a);
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

QTorusElement operator*(const ParamPoly& c, const QTorusElement& a) {
  require_parameter_only(c);
  QTorusElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.terms_) r.add_term(k, c * v);
  return r;
}

QTorusElement qmul(const QTorusElement& a, const QTorusElement& b) { return a * b; }

QTorusElement q_shift(const QTorusElement& a, int half_units) {
  QTorusElement r;
  for (const auto& [k, c] : a.terms()) r.add_term(QExponent{k.a, k.qh + half_units}, c);
  return r;
}

QTorusElement dagger(const QTorusElement& a) {
  QTorusElement r;
  for (const auto& [k, c] : a.terms()) r.add_term(QExponent{k.a, -k.qh}, c);
  return r;
}

LaurentPoly classical_limit(const QTorusElement& a) {
  LaurentPoly r;
  for (const auto& [k, c] : a.terms()) {
    const auto x = exactalg::ExponentVector::from_y(2 * k.a[0], 2 * k.a[1], 2 * k.a[2]);
    r += LaurentPoly::monomial(x) * c;
  }
  return r;
}

QTorusElement commutator(const QTorusElement& a, const QTorusElement& b) { return a * b - b * a; }

nlohmann::json to_json(const QTorusElement& a) {
  auto out = nlohmann::json::array();
  for (const auto& [k, c] : a.terms()) {
    out.push_back({{"coeff", exactalg::to_json(c)}, {"qh", k.qh}, {"a", k.a}});
  }
  return out;
}

QTorusElement qtorus_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("QTorusElement JSON must be an array of terms");
  QTorusElement r;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("qh") || !term.contains("a")) {
      throw std::invalid_argument("quantum term needs coeff, qh and a");
    }
    const auto& a = term.at("a");
    if (!a.is_array() || a.size() != 3) throw std::invalid_argument("a must be 3 ints");
    QExponent k{{a[0].get<int>(), a[1].get<int>(), a[2].get<int>()}, term.at("qh").get<int>()};
    const auto coeff = exactalg::laurent_from_json(term.at("coeff"));
    require_parameter_only(coeff);
    r.add_term(k, coeff);
  }
  return r;
}

}  // namespace d4shear::qtorus
