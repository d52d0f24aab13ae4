#include "d4shear/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace d4shear::exactalg {

namespace {

int checked_add(int a, int b) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

// Skew matrix of the shear-coordinate bracket: M_{12}=M_{23}=M_{31}=+1.
constexpr int kForm[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};

std::complex<double> ipow(std::complex<double> base, int e) {
  if (e == 0) return 1.0;
  std::complex<double> result = 1.0;
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace

ExponentVector::ExponentVector(std::array<int, 3> y_half, std::array<int, 3> p_half,
                               std::array<int, 3> g_pow)
    : y(y_half), p(p_half), g(g_pow) {
  for (int v : g) {
    if (v < 0) throw std::invalid_argument("ExponentVector: negative parameter power");
  }
}

ExponentVector ExponentVector::parameter(int index, int power) {
  if (index < 1 || index > 3) throw std::out_of_range("parameter index must be 1..3");
  std::array<int, 3> g{};
  g[index - 1] = power;
  return ExponentVector({}, {}, g);
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r;
  for (int i = 0; i < 3; ++i) {
    r.y[i] = checked_add(a.y[i], b.y[i]);
    r.p[i] = checked_add(a.p[i], b.p[i]);
    r.g[i] = checked_add(a.g[i], b.g[i]);
  }
  return r;
}

LaurentPoly y_monomial(int n1, int n2, int n3) {
  return LaurentPoly::monomial(ExponentVector::from_y(n1, n2, n3));
}

LaurentPoly parameter_symbol(int index) { return LaurentPoly::monomial(ExponentVector::parameter(index)); }

int lattice_form(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  int s = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s += a[i] * kForm[i][j] * b[j];
  }
  return s;
}

BigRational symplectic_form(const ExponentVector& a, const ExponentVector& b) {
  return BigRational(lattice_form(a.y, b.y), 4);
}

LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r;
  for (const auto& [ka, ca] : f.terms()) {
    for (const auto& [kb, cb] : g.terms()) {
      const int w = lattice_form(ka.y, kb.y);
      if (w == 0) continue;
      r.add_term(ka + kb, BigRational(w, 4) * ca * cb);
    }
  }
  return r;
}

EvalPoint EvalPoint::from_coordinates(const std::array<std::complex<double>, 3>& Y,
                                      const std::array<std::complex<double>, 3>& P,
                                      const std::array<std::complex<double>, 3>& G) {
  EvalPoint pt;
  for (int i = 0; i < 3; ++i) {
    pt.exp_half_y[i] = std::exp(0.5 * Y[i]);
    pt.exp_half_p[i] = std::exp(0.5 * P[i]);
    pt.g[i] = G[i];
  }
  return pt;
}

std::complex<double> evaluate(const LaurentPoly& f, const EvalPoint& point) {
  for (int i = 0; i < 3; ++i) {
    if (point.exp_half_y[i] == 0.0 || point.exp_half_p[i] == 0.0) {
      throw std::domain_error("evaluate: exponential value must be nonzero");
    }
  }
  std::complex<double> total = 0.0;
  for (const auto& [k, c] : f.terms()) {
    std::complex<double> m = c.to_double();
    for (int i = 0; i < 3; ++i) {
      m *= ipow(point.exp_half_y[i], k.y[i]);
      m *= ipow(point.exp_half_p[i], k.p[i]);
      m *= ipow(point.g[i], k.g[i]);
    }
    total += m;
  }
  return total;
}

LaurentPoly substitute_tilde(const LaurentPoly& f) {
  return f.map_keys([](ExponentVector k) {
    for (int i = 0; i < 3; ++i) {
      if (k.y[i] % 2 != 0) throw std::domain_error("substitute_tilde: odd Y half-unit exponent");
      k.p[i] -= k.y[i] / 2;
    }
    return k;
  });
}

LaurentPoly invert_tilde(const LaurentPoly& f) {
  return f.map_keys([](ExponentVector k) {
    for (int i = 0; i < 3; ++i) {
      if (k.y[i] % 2 != 0) throw std::domain_error("invert_tilde: odd Y half-unit exponent");
      k.p[i] += k.y[i] / 2;
    }
    return k;
  });
}

LaurentPoly reflect_perimeters(const LaurentPoly& f) {
  return f.map_keys([](ExponentVector k) {
    for (int& v : k.p) v = -v;
    return k;
  });
}

LaurentPoly substitute_hole_parameters(const LaurentPoly& f) {
  LaurentPoly hole[3];
  for (int i = 0; i < 3; ++i) {
    std::array<int, 3> up{}, down{};
    up[i] = 1;
    down[i] = -1;
    hole[i] = LaurentPoly::monomial(ExponentVector({}, up)) + LaurentPoly::monomial(ExponentVector({}, down));
  }
  LaurentPoly r;
  for (const auto& [k, c] : f.terms()) {
    ExponentVector bare = k;
    bare.g = {0, 0, 0};
    LaurentPoly term = LaurentPoly::monomial(bare, c);
    for (int i = 0; i < 3; ++i) term *= pow(hole[i], static_cast<unsigned>(k.g[i]));
    r += term;
  }
  return r;
}

LaurentPoly specialise_parameter(const LaurentPoly& f, int index, const BigRational& value) {
  if (index < 1 || index > 3) throw std::out_of_range("parameter index must be 1..3");
  LaurentPoly r;
  for (const auto& [k, c] : f.terms()) {
    ExponentVector bare = k;
    const int power = bare.g[index - 1];
    bare.g[index - 1] = 0;
    BigRational factor(1);
    for (int e = 0; e < power; ++e) factor *= value;
    r.add_term(bare, c * factor);
  }
  return r;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << (c.is_integer() ? c.numerator_str() : c.str());
    if (k.y != std::array<int, 3>{}) os << "*eY(" << k.y[0] << "," << k.y[1] << "," << k.y[2] << ")/2";
    if (k.p != std::array<int, 3>{}) os << "*eP(" << k.p[0] << "," << k.p[1] << "," << k.p[2] << ")/2";
    for (int i = 0; i < 3; ++i) {
      if (k.g[i] == 1) os << "*G" << i + 1;
      if (k.g[i] > 1) os << "*G" << i + 1 << "^" << k.g[i];
    }
  }
  return os.str();
}

}  // namespace d4shear::exactalg
