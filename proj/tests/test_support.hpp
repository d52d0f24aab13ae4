#pragma once

#include <complex>
#include <random>

#include "d4shear/laurent.hpp"
#include "d4shear/qtorus.hpp"

namespace d4shear::testing {

using exactalg::BigRational;
using exactalg::ExponentVector;
using exactalg::LaurentPoly;

inline BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return BigRational(num(rng), den(rng));
}

/// Up to `max_terms` terms, half-unit exponents in [-4, 4], G powers in [0, 2].
inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 5, bool with_p = true) {
  std::uniform_int_distribution<int> terms(1, max_terms), half(-4, 4), gp(0, 2), pp(-2, 2);
  LaurentPoly f;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    ExponentVector e({half(rng), half(rng), half(rng)});
    if (with_p) e.p = {pp(rng), pp(rng), pp(rng)};
    e.g = {gp(rng), gp(rng), gp(rng)};
    f.add_term(e, random_rational(rng));
  }
  return f;
}

inline qtorus::QTorusElement random_qtorus(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(1, max_terms), a(-2, 2), qh(-3, 3), gp(0, 1);
  qtorus::QTorusElement x;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    const LaurentPoly c = LaurentPoly::monomial(ExponentVector({}, {}, {gp(rng), gp(rng), gp(rng)}), random_rational(rng));
    x.add_term(qtorus::QExponent{{a(rng), a(rng), a(rng)}, qh(rng)}, c);
  }
  return x;
}

inline std::complex<double> random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  const double re = d(rng);
  return {re, d(rng)};
}

}  // namespace d4shear::testing
