#pragma once

#include <array>

namespace d4shear::monodromy {

/// 2x2 matrix over a commutative ring T (LaurentPoly or std::complex<double>).
template <class T>
struct Mat2 {
  std::array<T, 4> e{T(1), T(0), T(0), T(1)};  // row-major

  Mat2() = default;
  Mat2(T a, T b, T c, T d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 identity() { return Mat2(); }

  const T& operator()(int r, int c) const { return e[2 * r + c]; }
  T& operator()(int r, int c) { return e[2 * r + c]; }

  T trace() const { return e[0] + e[3]; }
  T det() const { return e[0] * e[3] - e[1] * e[2]; }
  /// Adjugate; the inverse when det = 1.
  Mat2 adjugate() const { return Mat2(e[3], -e[1], -e[2], e[0]); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2(x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]);
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return Mat2(x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]);
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return Mat2(x.e[0] - y.e[0], x.e[1] - y.e[1], x.e[2] - y.e[2], x.e[3] - y.e[3]);
  }
  Mat2 operator-() const { return Mat2(-e[0], -e[1], -e[2], -e[3]); }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Tr(AB) + Tr(AB^{-1}) - Tr(A) Tr(B), with B^{-1} the adjugate.
template <class T>
T skein_residual(const Mat2<T>& a, const Mat2<T>& b) {
  return (a * b).trace() + (a * b.adjugate()).trace() - a.trace() * b.trace();
}

}  // namespace d4shear::monodromy
