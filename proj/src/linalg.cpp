#include "coxtet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coxtet {

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized3(const Vec3& a) {
  double n = std::sqrt(dot3(a, a));
  return {a[0] / n, a[1] / n, a[2] / n};
}

double minkowski(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

Vec4 add4(const Vec4& a, const Vec4& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
Vec4 sub4(const Vec4& a, const Vec4& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
Vec4 scale4(const Vec4& a, double s) { return {a[0] * s, a[1] * s, a[2] * s, a[3] * s}; }

Vec4 reflect(const Vec4& x, const Vec4& e) {
  double c = 2.0 * minkowski(x, e);
  return sub4(x, scale4(e, c));
}

Vec4 mat_apply(const Mat4& m, const Vec4& x) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * x[j];
  return r;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat4 mat_inverse(const Mat4& m) {
  // Gauss-Jordan with partial pivoting
  std::array<std::array<double, 8>, 4> a{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
    a[i][4 + i] = 1.0;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-14) throw std::runtime_error("mat_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    double d = a[col][col];
    for (int j = 0; j < 8; ++j) a[col][j] /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) a[r][j] -= f * a[col][j];
    }
  }
  Mat4 inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i][j] = a[i][4 + j];
  return inv;
}

namespace {

template <std::size_t N>
void jacobi(std::array<std::array<double, N>, N> a, std::array<double, N>& w,
            std::array<std::array<double, N>, N>& v) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) v[i][j] = (i == j) ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double apq = a[p][q];
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          if (k != p && k != q) {
            double akp = (k < p) ? a[k][p] : a[p][k];
            double akq = (k < q) ? a[k][q] : a[q][k];
            double nkp = akp - s * (akq + tau * akp);
            double nkq = akq + s * (akp - tau * akq);
            (k < p ? a[k][p] : a[p][k]) = nkp;
            (k < q ? a[k][q] : a[q][k]) = nkq;
          }
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = vkp - s * (vkq + tau * vkp);
          v[k][q] = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i) w[i] = a[i][i];
  // sort ascending, carry eigenvector columns; fix column sign for determinism
  std::array<std::size_t, N> idx{};
  for (std::size_t i = 0; i < N; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return w[x] < w[y]; });
  std::array<double, N> ws = w;
  auto vs = v;
  for (std::size_t i = 0; i < N; ++i) {
    w[i] = ws[idx[i]];
    std::size_t big = 0;
    for (std::size_t k = 1; k < N; ++k)
      if (std::fabs(vs[k][idx[i]]) > std::fabs(vs[big][idx[i]])) big = k;
    double sgn = vs[big][idx[i]] >= 0 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < N; ++k) v[k][i] = sgn * vs[k][idx[i]];
  }
}

template <std::size_t N>
Signature signature_impl(const std::array<std::array<double, N>, N>& g, double tol) {
  std::array<double, N> w;
  std::array<std::array<double, N>, N> v;
  jacobi<N>(g, w, v);
  Signature s;
  for (double lam : w) {
    if (lam > tol)
      ++s.pos;
    else if (lam < -tol)
      ++s.neg;
    else
      ++s.zero;
  }
  return s;
}

}  // namespace

Eigen3 sym_eigen(const Mat3& m) {
  Eigen3 e;
  jacobi<3>(m, e.values, e.vectors);
  return e;
}

Eigen4 sym_eigen(const Mat4& m) {
  Eigen4 e;
  jacobi<4>(m, e.values, e.vectors);
  return e;
}

Signature signature(const Mat3& g, double tol) { return signature_impl<3>(g, tol); }
Signature signature(const Mat4& g, double tol) { return signature_impl<4>(g, tol); }

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace coxtet
