#include <stdexcept>

#include "d4shear/monodromy.hpp"

namespace d4shear::monodromy {

namespace {

using Mat4 = std::array<complex, 16>;

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      if (a[4 * i + k] == 0.0) continue;
      for (int j = 0; j < 4; ++j) r[4 * i + j] += a[4 * i + k] * b[4 * k + j];
    }
  }
  return r;
}

// M (x) I and I (x) M.
Mat4 first_slot(const NumMat& m) {
  Mat4 r{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) r[4 * (2 * a + c) + (2 * b + c)] = m(a, b);
  return r;
}

Mat4 second_slot(const NumMat& m) {
  Mat4 r{};
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int d = 0; d < 2; ++d) r[4 * (2 * a + c) + (2 * a + d)] = m(c, d);
  return r;
}

// Omega = sum E_ab (x) E_ba.
Mat4 exchange() {
  Mat4 r{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r[4 * (2 * a + b) + (2 * b + a)] = 1.0;
  return r;
}

Mat4 combine(const Mat4& x, const Mat4& y, const Mat4& z, const Mat4& w) {
  Mat4 r{};
  for (int i = 0; i < 16; ++i) r[i] = 0.5 * (x[i] + y[i] - z[i] - w[i]);
  return r;
}

// Structure tensor {M_i (x), M_j} for i <= j (0-based).
Mat4 structure(const MonodromyTriple& m, int i, int j) {
  const Mat4 om = exchange();
  const NumMat& mi = m.at(i + 1);
  const NumMat& mj = m.at(j + 1);
  if (i == j) {
    const Mat4 one = first_slot(mi), two = second_slot(mi);
    const Mat4 zero{};
    return combine(mul(mul(two, om), one), zero, mul(mul(one, om), two), zero);
  }
  const Mat4 one = first_slot(mi), two = second_slot(mj);
  return combine(mul(mul(one, om), two), mul(mul(two, om), one), mul(mul(om, one), two), mul(mul(two, one), om));
}

}  // namespace

complex ks_bracket(const MonodromyTriple& m, std::array<int, 2> first, std::array<int, 2> second) {
  for (int x : {first[0], first[1], second[0], second[1]}) {
    if (x < 1 || x > 3) throw std::invalid_argument("ks_bracket: indices must be in 1..3");
  }
  if (first[0] == first[1] || second[0] == second[1]) {
    throw std::invalid_argument("ks_bracket: unsupported index pattern (need i != j and k != l)");
  }

  std::array<std::array<Mat4, 3>, 3> t;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) t[i][j] = structure(m, i, j);

  // {M_i[a,b], M_j[c,d]}
  auto entry_bracket = [&](int i, int a, int b, int j, int c, int d) -> complex {
    if (i > j) return -t[j][i][4 * (2 * c + a) + (2 * d + b)];
    return t[i][j][4 * (2 * a + c) + (2 * b + d)];
  };

  // d(-Tr M_p M_q)/d M_p[a,b] = -M_q[b,a].
  struct Grad {
    int mat;
    complex v[2][2];
  };
  auto gradient = [&](std::array<int, 2> pr) {
    std::array<Grad, 2> g{};
    for (int s = 0; s < 2; ++s) {
      const NumMat& other = m.at(pr[1 - s]);
      g[s].mat = pr[s] - 1;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g[s].v[a][b] = -other(b, a);
    }
    return g;
  };

  const auto gf = gradient(first), gg = gradient(second);
  complex total = 0.0;
  for (const auto& x : gf)
    for (const auto& y : gg)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d) total += x.v[a][b] * y.v[c][d] * entry_bracket(x.mat, a, b, y.mat, c, d);
  return total;
}

complex ks_trace_difference(const MonodromyTriple& m) {
  return (m.m1 * m.m2 * m.m3 * m.m2 - m.m1 * m.m2 * m.m2 * m.m3).trace();
}

}  // namespace d4shear::monodromy
