#pragma once

#include <array>
#include <compare>
#include <map>

#include <json.hpp>

#include "d4shear/laurent.hpp"

namespace d4shear::qtorus {

using exactalg::BigRational;
using exactalg::LaurentPoly;

/// Coefficient ring of the quantum torus: polynomials in G_1, G_2, G_3.
/// Stored as LaurentPoly with vanishing y and p components.
using ParamPoly = LaurentPoly;

/// q^{qh/2} X^a, with X^a the Weyl-ordered exponential e^{a . Y^hbar}.
struct QExponent {
  std::array<int, 3> a{};
  int qh = 0;

  friend bool operator==(const QExponent&, const QExponent&) = default;
  friend auto operator<=>(const QExponent&, const QExponent&) = default;
};

/// Element of the quantum torus in normal form: a finite sum of
/// coeff * q^{qh/2} * X^a. Multiplication follows
///   X^a X^b = q^{-w(a,b)/2} X^{a+b},  w(a,b) = a^T M b.
class QTorusElement {
 public:
  using TermMap = std::map<QExponent, ParamPoly>;

  QTorusElement() = default;
  QTorusElement(long constant) : QTorusElement(ParamPoly(constant)) {}  // NOLINT
  QTorusElement(const ParamPoly& constant);                             // NOLINT

  /// coeff * X^a.
  static QTorusElement weyl(std::array<int, 3> a, const ParamPoly& coeff = ParamPoly(1L));

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const QExponent& key, const ParamPoly& coeff);

  QTorusElement& operator+=(const QTorusElement& o);
  QTorusElement& operator-=(const QTorusElement& o);
  friend QTorusElement operator+(QTorusElement a, const QTorusElement& b) { return a += b; }
  friend QTorusElement operator-(QTorusElement a, const QTorusElement& b) { return a -= b; }
  QTorusElement operator-() const;
  friend QTorusElement operator*(const QTorusElement& a, const QTorusElement& b);
  friend QTorusElement operator*(const ParamPoly& c, const QTorusElement& a);

  friend bool operator==(const QTorusElement&, const QTorusElement&) = default;

 private:
  TermMap terms_;
};

/// Twisted product; same as operator*.
QTorusElement qmul(const QTorusElement& a, const QTorusElement& b);

/// Multiplies by q^{half_units/2}.
QTorusElement q_shift(const QTorusElement& a, int half_units);

/// Anti-involution: q^{1/2} -> q^{-1/2}, X^a fixed, rational coefficients fixed.
QTorusElement dagger(const QTorusElement& a);

/// q -> 1 and X^a -> e^{a.Y}; lands on the even y sublattice.
LaurentPoly classical_limit(const QTorusElement& a);

/// AB - BA.
QTorusElement commutator(const QTorusElement& a, const QTorusElement& b);

nlohmann::json to_json(const QTorusElement& a);
QTorusElement qtorus_from_json(const nlohmann::json& j);

}  // namespace d4shear::qtorus
