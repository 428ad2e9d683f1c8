#include "coxtet/realize.hpp"

#include <cmath>
#include <stdexcept>

namespace coxtet {

Mat4 TetRealization::gram() const {
  Mat4 g{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = minkowski(normals[i], normals[j]);
  return g;
}

Vec4 minkowski_orthogonal(const Vec4& a, const Vec4& b, const Vec4& c) {
  // x with <x,a> = <x,b> = <x,c> = 0: Euclidean 4D cross of (Ma, Mb, Mc)
  Vec4 ma = {a[0], a[1], a[2], -a[3]};
  Vec4 mb = {b[0], b[1], b[2], -b[3]};
  Vec4 mc = {c[0], c[1], c[2], -c[3]};
  Vec4 x{};
  for (int i = 0; i < 4; ++i) {
    // cofactor expansion: x[i] = (-1)^i det of the 3x3 omitting column i
    double m[3][3];
    int col = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      m[0][col] = ma[j];
      m[1][col] = mb[j];
      m[2][col] = mc[j];
      ++col;
    }
    double d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    x[i] = (i % 2 == 0) ? d : -d;
  }
  return x;
}

TetRealization realize(const Mat4& gram, double tol) {
  Signature sig = signature(gram, tol);
  if (!(sig.pos == 3 && sig.neg == 1))
    throw std::domain_error("realize: Gram matrix is not of signature (3,1)");
  Eigen4 eg = sym_eigen(gram);
  // eigenvalues ascending: [0] negative, [1..3] positive
  TetRealization r;
  for (int i = 0; i < 4; ++i) {
    r.normals[i] = {std::sqrt(eg.values[1]) * eg.vectors[i][1],
                    std::sqrt(eg.values[2]) * eg.vectors[i][2],
                    std::sqrt(eg.values[3]) * eg.vectors[i][3],
                    std::sqrt(-eg.values[0]) * eg.vectors[i][0]};
  }
  // vertices: solve <v_j, n_i> = -delta_ij
  Mat4 a{};  // a[i][k] = (M n_i)[k]
  for (int i = 0; i < 4; ++i) {
    a[i] = {r.normals[i][0], r.normals[i][1], r.normals[i][2], -r.normals[i][3]};
  }
  Mat4 ainv = mat_inverse(a);
  for (int j = 0; j < 4; ++j) {
    Vec4 v = {-ainv[0][j], -ainv[1][j], -ainv[2][j], -ainv[3][j]};
    double q = minkowski(v, v);
    double scale2 = -q;  // positive for timelike
    if (scale2 > tol) {
      v = scale4(v, 1.0 / std::sqrt(scale2));
      if (v[3] < 0) v = scale4(v, -1.0);
      r.vtype[j] = VertexType::Finite;
    } else if (q < tol && q > -tol * 10) {
      // null: keep the <v, n_j> = -1 scale
      if (v[3] < 0) throw std::domain_error("realize: past-pointing ideal vertex");
      r.vtype[j] = VertexType::Ideal;
    } else {
      throw std::domain_error("realize: ultra-ideal vertex");
    }
    r.vertices[j] = v;
  }
  // orientation sanity: ensure future time-axis points inside-compatible
  return r;
}

TetRealization realization_from_normals(const std::array<Vec4, 4>& normals, double tol) {
  TetRealization r;
  r.normals = normals;
  Mat4 a{};
  for (int i = 0; i < 4; ++i) a[i] = {normals[i][0], normals[i][1], normals[i][2], -normals[i][3]};
  Mat4 ainv = mat_inverse(a);
  for (int j = 0; j < 4; ++j) {
    Vec4 v = {-ainv[0][j], -ainv[1][j], -ainv[2][j], -ainv[3][j]};
    double q = minkowski(v, v);
    if (q < -tol) {
      v = scale4(v, 1.0 / std::sqrt(-q));
      if (v[3] < 0) v = scale4(v, -1.0);
      r.vtype[j] = VertexType::Finite;
    } else if (q < tol) {
      if (v[3] < 0) v = scale4(v, -1.0);
      r.vtype[j] = VertexType::Ideal;
    } else {
      throw std::domain_error("realization_from_normals: ultra-ideal vertex");
    }
    r.vertices[j] = v;
  }
  return r;
}

TetRealization realize(const TetShape& t, double tol) {
  TetRealization r = realize(gram_matrix(t), tol);
  // overwrite numeric classification with the structural one
  for (int v = 0; v < 4; ++v) {
    VertexType vt = vertex_type(t, v, tol);
    if (vt == VertexType::Invalid) throw std::domain_error("realize: invalid vertex");
    if (vt != r.vtype[v]) throw std::domain_error("realize: vertex classification mismatch");
  }
  return r;
}

bool point_inside(const TetRealization& r, const Vec4& x, double margin) {
  for (int i = 0; i < 4; ++i)
    if (minkowski(x, r.normals[i]) > -margin) return false;
  return true;
}

Vec4 interior_point(const TetRealization& r, const std::array<double, 4>& w) {
  Vec4 x{};
  for (int i = 0; i < 4; ++i) x = add4(x, scale4(r.vertices[i], w[i]));
  double q = minkowski(x, x);
  if (q >= 0) throw std::runtime_error("interior_point: not timelike");
  x = scale4(x, 1.0 / std::sqrt(-q));
  if (x[3] < 0) x = scale4(x, -1.0);
  return x;
}

Vec4 face_side_normal(const TetRealization& r, int f, int a) {
  const Vec4& n = r.normals[f];
  Vec4 m = sub4(r.normals[a], scale4(n, minkowski(r.normals[a], n)));
  double q = minkowski(m, m);
  return scale4(m, 1.0 / std::sqrt(q));
}

Vec4 face_incenter(const TetRealization& r, int f) {
  int others[3], k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != f) others[k++] = i;
  Vec4 m0 = face_side_normal(r, f, others[0]);
  Vec4 m1 = face_side_normal(r, f, others[1]);
  Vec4 m2 = face_side_normal(r, f, others[2]);
  Vec4 c = minkowski_orthogonal(r.normals[f], sub4(m0, m1), sub4(m0, m2));
  double q = minkowski(c, c);
  if (q >= -1e-14) throw std::runtime_error("face_incenter: degenerate face");
  c = scale4(c, 1.0 / std::sqrt(-q));
  if (c[3] < 0) c = scale4(c, -1.0);
  if (minkowski(c, m0) > 0) throw std::runtime_error("face_incenter: orientation failure");
  return c;
}

Mat4 face_frame(const TetRealization& r, int face, int corner1, int corner2) {
  const Vec4& n = r.normals[face];
  Vec4 c = face_incenter(r, face);
  // direction from the incenter toward corner1, inside the face plane
  Vec4 u = add4(r.vertices[corner1], scale4(c, minkowski(r.vertices[corner1], c)));
  double qu = minkowski(u, u);
  if (qu <= 1e-14) throw std::runtime_error("face_frame: degenerate corner direction");
  Vec4 f1 = scale4(u, 1.0 / std::sqrt(qu));
  Vec4 f2 = minkowski_orthogonal(n, c, f1);
  double q2 = minkowski(f2, f2);
  f2 = scale4(f2, 1.0 / std::sqrt(q2));
  if (minkowski(r.vertices[corner2], f2) < 0) f2 = scale4(f2, -1.0);
  Mat4 fr{};
  for (int i = 0; i < 4; ++i) {
    fr[i][0] = f1[i];
    fr[i][1] = f2[i];
    fr[i][2] = n[i];
    fr[i][3] = c[i];
  }
  return fr;
}

Mat4 frame_map(const Mat4& from, const Mat4& to) {
  // from^{-1} = J from^T M for Minkowski-orthonormal frames
  Mat4 inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double v = from[j][i];
      if (j == 3) v = -v;
      if (i == 3) v = -v;
      inv[i][j] = v;
    }
  return mat_mul(to, inv);
}

Mat4 seat_across(const TetRealization& dst, int p, int c1d, int c2d,
                 const TetRealization& src, int q, int c1s, int c2s) {
  Mat4 fd = face_frame(dst, p, c1d, c2d);
  Mat4 fs = face_frame(src, q, c1s, c2s);
  // flip the normal axis so the source body lands on the far side
  Mat4 flip{};
  flip[0][0] = 1;
  flip[1][1] = 1;
  flip[2][2] = -1;
  flip[3][3] = 1;
  return frame_map(fs, mat_mul(fd, flip));
}

bool is_minkowski_isometry(const Mat4& g, double tol) {
  // g^T M g = M
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += g[k][i] * (k == 3 ? -1.0 : 1.0) * g[k][j];
      double want = (i == j) ? (i == 3 ? -1.0 : 1.0) : 0.0;
      if (std::fabs(s - want) > tol) return false;
    }
  return true;
}

UpperHalfSpace upper_half_space_at(const Vec4& Lin) {
  UpperHalfSpace h;
  h.L = Lin;
  double spatial = Lin[0] * Lin[0] + Lin[1] * Lin[1] + Lin[2] * Lin[2] + Lin[3] * Lin[3];
  Vec4 lp = {-Lin[0], -Lin[1], -Lin[2], Lin[3]};
  h.Lp = scale4(lp, 1.0 / spatial);  // <L, Lp> = -1
  // complete with two spacelike directions
  int found = 0;
  for (int s = 0; s < 3 && found < 2; ++s) {
    Vec4 seed{};
    seed[s] = 1.0;
    Vec4 u = seed;
    u = add4(u, scale4(h.L, minkowski(seed, h.Lp)));
    u = add4(u, scale4(h.Lp, minkowski(seed, h.L)));
    if (found == 1) u = sub4(u, scale4(h.u1, minkowski(u, h.u1)));
    double q = minkowski(u, u);
    if (q < 1e-8) continue;
    u = scale4(u, 1.0 / std::sqrt(q));
    if (found == 0)
      h.u1 = u;
    else
      h.u2 = u;
    ++found;
  }
  if (found < 2) throw std::runtime_error("upper_half_space_at: frame construction failed");
  return h;
}

UpperHalfSpace::Line UpperHalfSpace::trace_line(const Vec4& e) const {
  double nx = minkowski(e, u1);
  double ny = minkowski(e, u2);
  double c = -minkowski(e, Lp);
  double len = std::hypot(nx, ny);
  if (len < 1e-9) throw std::runtime_error("trace_line: plane does not pass through L transversally");
  return {nx / len, ny / len, c / len};
}

std::array<double, 2> UpperHalfSpace::ideal_point(const Vec4& w) const {
  double b = -minkowski(w, L);
  if (std::fabs(b) < 1e-12) throw std::runtime_error("ideal_point: point at infinity of the chart");
  return {minkowski(w, u1) / b, minkowski(w, u2) / b};
}

}  // namespace coxtet
