#include "coxtet/shape.hpp"

#include <cmath>
#include <stdexcept>

namespace coxtet {

int TetShape::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 3 || i == j) throw std::invalid_argument("pair_index: bad face pair");
  static const int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[i][j];
}

bool TetShape::is_coxeter() const {
  for (const auto& x : a)
    if (x.num != 1) return false;
  return true;
}

std::string TetShape::str() const {
  std::string s;
  for (int k = 0; k < 6; ++k) {
    if (k) s += ",";
    s += a[k].str();
  }
  return s;
}

TetShape linear_diagram(int p, int q, int r) {
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 2);
  t.angle(0, 1) = AngleFrac(1, p);
  t.angle(1, 2) = AngleFrac(1, q);
  t.angle(2, 3) = AngleFrac(1, r);
  return t;
}

TetShape shape_from(const std::array<std::array<int, 3>, 6>& entries) {
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 2);
  for (const auto& e : entries)
    if (e[2] != 0) t.angle(e[0], e[1]) = AngleFrac(1, e[2]);
  return t;
}

Mat4 gram_matrix(const TetShape& t) {
  Mat4 g{};
  for (int i = 0; i < 4; ++i) g[i][i] = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g[i][j] = g[j][i] = -cos_of(t.angle(i, j));
  return g;
}

Mat3 vertex_link_gram(const TetShape& t, int v) {
  Mat3 m{};
  int rows[3], r = 0;
  for (int i = 0; i < 4; ++i)
    if (i != v) rows[r++] = i;
  for (int i = 0; i < 3; ++i) {
    m[i][i] = 1.0;
    for (int j = i + 1; j < 3; ++j)
      m[i][j] = m[j][i] = -cos_of(t.angle(rows[i], rows[j]));
  }
  return m;
}

VertexType vertex_type(const TetShape& t, int v, double tol) {
  Signature s = signature(vertex_link_gram(t, v), tol);
  if (s.pos == 3) return VertexType::Finite;
  if (s.pos == 2 && s.zero == 1) return VertexType::Ideal;
  return VertexType::Invalid;
}

double face_angle(const TetShape& t, int f, int v) {
  if (f == v) throw std::invalid_argument("face_angle: vertex not on face");
  int other[2], r = 0;
  for (int i = 0; i < 4; ++i)
    if (i != f && i != v) other[r++] = i;
  double ta = t.angle(f, other[0]).value();
  double tb = t.angle(f, other[1]).value();
  double tc = t.angle(other[0], other[1]).value();
  double sa = std::sin(ta), sb = std::sin(tb);
  if (sa < 1e-12 || sb < 1e-12) throw std::runtime_error("face_angle: degenerate link");
  double c = (std::cos(tc) + std::cos(ta) * std::cos(tb)) / (sa * sb);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

bool is_hyperbolic(const TetShape& t, double tol) {
  Signature s = signature(gram_matrix(t), tol);
  if (!(s.pos == 3 && s.neg == 1 && s.zero == 0)) return false;
  for (int v = 0; v < 4; ++v)
    if (vertex_type(t, v, tol) == VertexType::Invalid) return false;
  return true;
}

int ideal_vertex_count(const TetShape& t, double tol) {
  int n = 0;
  for (int v = 0; v < 4; ++v)
    if (vertex_type(t, v, tol) == VertexType::Ideal) ++n;
  return n;
}

std::array<EdgePair, 3> opposite_edge_pairs() {
  return {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
}

}  // namespace coxtet
