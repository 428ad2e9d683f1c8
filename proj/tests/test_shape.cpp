#include "doctest.h"

#include <cmath>

#include "coxtet/canonical.hpp"
#include "coxtet/shape.hpp"

using namespace coxtet;

namespace {

TetShape all_pi3() {
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 3);
  return t;
}

// independent signature oracle for nondegenerate symmetric matrices:
// sign changes in the sequence of leading principal minors (Jacobi's rule)
Signature minor_signature(const Mat4& g) {
  double minors[5];
  minors[0] = 1.0;
  for (int k = 1; k <= 4; ++k) {
    // determinant of leading k x k block by Gaussian elimination
    double a[4][4];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = g[i][j];
    double det = 1.0;
    for (int c = 0; c < k; ++c) {
      int piv = c;
      for (int r = c + 1; r < k; ++r)
        if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
      if (piv != c) {
        for (int j = 0; j < k; ++j) std::swap(a[piv][j], a[c][j]);
        det = -det;
      }
      det *= a[c][c];
      if (a[c][c] == 0.0) break;
      for (int r = c + 1; r < k; ++r) {
        double f = a[r][c] / a[c][c];
        for (int j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      }
    }
    minors[k] = det;
  }
  Signature s;
  for (int k = 1; k <= 4; ++k) {
    if (minors[k] * minors[k - 1] > 0)
      ++s.pos;
    else
      ++s.neg;
  }
  return s;
}

}  // namespace

TEST_CASE("gram matrix entries") {
  TetShape right;
  for (auto& x : right.a) x = AngleFrac(1, 2);
  Mat4 g = gram_matrix(right);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(g[i][j] == (i == j ? 1.0 : 0.0));

  TetShape t = linear_diagram(3, 3, 6);
  g = gram_matrix(t);
  CHECK(g[0][1] == -0.5);
  CHECK(g[1][2] == -0.5);
  CHECK(g[2][3] == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-15));
  CHECK(g[0][2] == 0.0);
  CHECK(g[0][3] == 0.0);
  CHECK(g[1][3] == 0.0);

  g = gram_matrix(all_pi3());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(g[i][j] == -0.5);
}

TEST_CASE("signature of catalog shapes") {
  TetShape right;
  for (auto& x : right.a) x = AngleFrac(1, 2);
  CHECK(signature(gram_matrix(right), 1e-9) == Signature{4, 0, 0});

  // eigen-solve route vs leading-minor oracle
  Mat4 g = gram_matrix(linear_diagram(3, 3, 6));
  CHECK(signature(g, 1e-9) == Signature{3, 1, 0});
  CHECK(minor_signature(g) == Signature{3, 1, 0});

  // all-pi/3 Gram is (3/2)I - (1/2)J with closed-form spectrum
  // {-1/2, 3/2, 3/2, 3/2}; its leading 3x3 minor vanishes, so the minor rule
  // does not apply here.
  g = gram_matrix(all_pi3());
  CHECK(signature(g, 1e-9) == Signature{3, 1, 0});
  Eigen4 eg = sym_eigen(g);
  CHECK(eg.values[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(eg.values[1] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(eg.values[3] == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("signature invariant under the 24 simultaneous permutations") {
  TetShape t = linear_diagram(5, 3, 4);
  Signature ref = signature(gram_matrix(t), 1e-9);
  for (const auto& p : all_perms4()) {
    Signature s = signature(gram_matrix(relabel(t, p)), 1e-9);
    CHECK(s == ref);
  }
}

TEST_CASE("vertex classification") {
  // link (pi/2, pi/3, pi/3): 3x3 determinant = 1 - 2*(1/4) ... positive
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 2);
  t.angle(1, 2) = AngleFrac(1, 3);
  t.angle(1, 3) = AngleFrac(1, 3);
  // vertex 0 has link on faces {1,2,3} with angles (pi/3, pi/3, pi/2)
  Mat3 link = vertex_link_gram(t, 0);
  CHECK(det3(link) > 0);
  CHECK(vertex_type(t, 0) == VertexType::Finite);

  // [3,3,6]: vertex 0 link carries angles (pi/3, pi/2, pi/6): determinant 0
  TetShape h = linear_diagram(3, 3, 6);
  CHECK(std::fabs(det3(vertex_link_gram(h, 0))) < 1e-12);
  CHECK(vertex_type(h, 0) == VertexType::Ideal);
  CHECK(vertex_type(h, 1) == VertexType::Finite);
  CHECK(vertex_type(h, 2) == VertexType::Finite);
  CHECK(vertex_type(h, 3) == VertexType::Finite);
  CHECK(ideal_vertex_count(h) == 1);

  // all-pi/3: every vertex ideal ((3,3,3) link determinant = 0)
  TetShape p = all_pi3();
  for (int v = 0; v < 4; ++v) {
    CHECK(std::fabs(det3(vertex_link_gram(p, v))) < 1e-12);
    CHECK(vertex_type(p, v) == VertexType::Ideal);
  }
}

TEST_CASE("is_hyperbolic and perturbation flips the verdict") {
  TetShape t = linear_diagram(5, 3, 4);
  CHECK(is_hyperbolic(t));
  CHECK(linear_diagram(3, 3, 6).is_coxeter());
  CHECK(is_hyperbolic(linear_diagram(3, 3, 6)));
  CHECK(is_hyperbolic(all_pi3()));

  // making one link indefinite invalidates the shape
  TetShape bad = linear_diagram(3, 3, 6);
  bad.angle(2, 3) = AngleFrac(1, 7);  // link (3,7,2) becomes hyperbolic
  CHECK(vertex_type(bad, 0) == VertexType::Invalid);
  CHECK(!is_hyperbolic(bad));

  // spherical shape: one acute angle only
  TetShape sph;
  for (auto& x : sph.a) x = AngleFrac(1, 2);
  sph.angle(0, 1) = AngleFrac(1, 7);
  CHECK(signature(gram_matrix(sph), 1e-9) == Signature{4, 0, 0});
  CHECK(!is_hyperbolic(sph));
}

TEST_CASE("face angles from vertex links") {
  TetShape right;
  for (auto& x : right.a) x = AngleFrac(1, 2);
  CHECK(face_angle(right, 0, 1) == doctest::Approx(M_PI / 2));

  // link dihedrals theta_a = theta_b = pi/2 collapse to theta_c
  TetShape t = linear_diagram(3, 3, 6);
  // face 0 at vertex 1: edges of face 0 through v1 are 0^2 and 0^3 (both
  // right), third edge 2^3 carries pi/6
  CHECK(face_angle(t, 0, 1) == doctest::Approx(M_PI / 6).epsilon(1e-12));

  // theta_a = theta_b = pi/3, theta_c = pi/2 -> arccos(1/3)
  TetShape s;
  for (auto& x : s.a) x = AngleFrac(1, 2);
  s.angle(0, 2) = AngleFrac(1, 3);
  s.angle(0, 3) = AngleFrac(1, 3);
  // face 0 at vertex 1: edges 0^2, 0^3 have pi/3; edge 2^3 right
  CHECK(face_angle(s, 0, 1) == doctest::Approx(std::acos(1.0 / 3)).epsilon(1e-12));

  // symmetric in theta_a, theta_b: swap faces 2 and 3
  TetShape sw;
  for (auto& x : sw.a) x = AngleFrac(1, 2);
  sw.angle(0, 2) = AngleFrac(1, 5);
  sw.angle(0, 3) = AngleFrac(1, 4);
  sw.angle(2, 3) = AngleFrac(1, 3);
  TetShape sw2 = sw;
  std::swap(sw2.angle(0, 2), sw2.angle(0, 3));
  CHECK(face_angle(sw, 0, 1) == doctest::Approx(face_angle(sw2, 0, 1)).epsilon(1e-14));

  // ideal corner: [3,3,6] face 1 at the ideal vertex 0 is an angle-0 corner
  CHECK(face_angle(t, 1, 0) == doctest::Approx(0.0).epsilon(1e-7));
}
