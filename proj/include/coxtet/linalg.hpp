#pragma once

#include <array>
#include <cstddef>

namespace coxtet {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;

double dot3(const Vec3& a, const Vec3& b);
Vec3 cross3(const Vec3& a, const Vec3& b);
Vec3 normalized3(const Vec3& a);

// Minkowski form diag(1,1,1,-1); time coordinate last.
double minkowski(const Vec4& a, const Vec4& b);
Vec4 add4(const Vec4& a, const Vec4& b);
Vec4 sub4(const Vec4& a, const Vec4& b);
Vec4 scale4(const Vec4& a, double s);
// reflection in the plane with unit spacelike normal e
Vec4 reflect(const Vec4& x, const Vec4& e);
Vec4 mat_apply(const Mat4& m, const Vec4& x);
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 mat_inverse(const Mat4& m);  // throws on singular

// Symmetric eigenproblem by cyclic Jacobi sweeps; eigenvalues ascending,
// eigenvectors as columns of V.  Deterministic for identical input.
struct Eigen3 {
  std::array<double, 3> values;
  Mat3 vectors;
};
struct Eigen4 {
  std::array<double, 4> values;
  Mat4 vectors;
};
Eigen3 sym_eigen(const Mat3& m);
Eigen4 sym_eigen(const Mat4& m);

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature& o) const {
    return pos == o.pos && neg == o.neg && zero == o.zero;
  }
};

Signature signature(const Mat3& g, double tol);
Signature signature(const Mat4& g, double tol);

double det3(const Mat3& m);

}  // namespace coxtet
