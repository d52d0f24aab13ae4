#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "d4shear/rational.hpp"

namespace d4shear::exactalg {

/// Finite sum of monomials with exact rational coefficients.
///
/// `Key` is a commutative monomial: default construction is the unit
/// monomial, `operator+` multiplies two monomials and `operator<` gives the
/// canonical term order. Zero coefficients are never stored, so two
/// polynomials are equal exactly when their term maps are equal.
template <class Key>
class SparsePoly {
 public:
  using key_type = Key;
  using TermMap = std::map<Key, BigRational>;

  SparsePoly() = default;
  SparsePoly(long constant) : SparsePoly(BigRational(constant)) {}  // NOLINT
  SparsePoly(const BigRational& constant) {                          // NOLINT
    if (!constant.is_zero()) terms_.emplace(Key{}, constant);
  }

  static SparsePoly monomial(const Key& key, const BigRational& coeff = BigRational(1)) {
    SparsePoly p;
    p.add_term(key, coeff);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigRational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? BigRational() : it->second;
  }

  /// Adds `coeff * key`, dropping the entry if it cancels.
  void add_term(const Key& key, const BigRational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    }
    return r;
  }
  friend SparsePoly operator*(const BigRational& s, SparsePoly p) {
    if (s.is_zero()) return {};
    for (auto& [k, c] : p.terms_) c *= s;
    return p;
  }
  SparsePoly operator-() const { return BigRational(-1) * *this; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Applies a monomial relabeling `key -> f(key)`; coefficients are kept.
  template <class F>
  SparsePoly map_keys(F&& f) const {
    SparsePoly r;
    for (const auto& [k, c] : terms_) r.add_term(f(k), c);
    return r;
  }

 private:
  TermMap terms_;
};

template <class Key>
SparsePoly<Key> pow(const SparsePoly<Key>& base, unsigned exponent) {
  SparsePoly<Key> result(1L);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace d4shear::exactalg
