#include "doctest.h"

#include <cmath>

#include "coxtet/realize.hpp"
#include "coxtet/tiling.hpp"

using namespace coxtet;

namespace {

TetShape all_pi3() {
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 3);
  return t;
}

}  // namespace

TEST_CASE("realization reproduces the Gram matrix") {
  for (auto t : {linear_diagram(5, 3, 4), linear_diagram(3, 3, 6), all_pi3()}) {
    TetRealization r = realize(t);
    Mat4 g = gram_matrix(t);
    Mat4 gr = r.gram();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(gr[i][j] == doctest::Approx(g[i][j]).epsilon(1e-10));
  }
}

TEST_CASE("vertices sit on their three faces, off the fourth") {
  TetShape t = linear_diagram(3, 3, 6);
  TetRealization r = realize(t);
  for (int v = 0; v < 4; ++v) {
    for (int f = 0; f < 4; ++f) {
      double d = minkowski(r.vertices[v], r.normals[f]);
      if (f == v) {
        CHECK(d < -1e-9);  // strictly on the inner side of the opposite face
        if (r.vtype[v] == VertexType::Ideal) CHECK(d == doctest::Approx(-1.0).epsilon(1e-9));
      } else {
        CHECK(std::fabs(d) < 1e-9);
      }
    }
    if (r.vtype[v] == VertexType::Finite)
      CHECK(minkowski(r.vertices[v], r.vertices[v]) == doctest::Approx(-1.0).epsilon(1e-9));
    else
      CHECK(std::fabs(minkowski(r.vertices[v], r.vertices[v])) < 1e-9);
    CHECK(r.vertices[v][3] > 0);
  }
  CHECK(r.vtype[0] == VertexType::Ideal);
  CHECK(r.vtype[1] == VertexType::Finite);
}

TEST_CASE("interior points are interior") {
  TetRealization r = realize(linear_diagram(5, 3, 4));
  Vec4 c = interior_point(r, {1, 1, 1, 1});
  CHECK(point_inside(r, c, 1e-6));
  CHECK(minkowski(c, c) == doctest::Approx(-1.0));
}

TEST_CASE("face frames are Minkowski-orthonormal") {
  TetRealization r = realize(linear_diagram(3, 3, 6));
  Mat4 fr = face_frame(r, 0, 1, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec4 ci = {fr[0][i], fr[1][i], fr[2][i], fr[3][i]};
      Vec4 cj = {fr[0][j], fr[1][j], fr[2][j], fr[3][j]};
      double want = i == j ? (i == 3 ? -1.0 : 1.0) : 0.0;
      CHECK(minkowski(ci, cj) == doctest::Approx(want).epsilon(1e-9));
    }
  CHECK(is_minkowski_isometry(frame_map(fr, fr), 1e-9));
}

TEST_CASE("seat_across maps the glued face onto itself reversed") {
  TetShape t = linear_diagram(3, 3, 6);
  TetRealization r = realize(t);
  Mat4 g = seat_across(r, 0, 1, 2, r, 0, 1, 2);
  CHECK(is_minkowski_isometry(g, 1e-9));
  // face-0 normal reverses
  Vec4 gn = mat_apply(g, r.normals[0]);
  for (int k = 0; k < 4; ++k) CHECK(gn[k] == doctest::Approx(-r.normals[0][k]).epsilon(1e-9));
  // the three vertices of face 0 stay fixed
  for (int v = 1; v < 4; ++v) {
    Vec4 gv = mat_apply(g, r.vertices[v]);
    for (int k = 0; k < 4; ++k) CHECK(gv[k] == doctest::Approx(r.vertices[v][k]).epsilon(1e-8));
  }
}

TEST_CASE("reflection preserves the form and fixes the plane") {
  TetRealization r = realize(all_pi3());
  Vec4 e = r.normals[2];
  Vec4 x = interior_point(r, {1, 2, 3, 4});
  Vec4 rx = reflect(x, e);
  CHECK(minkowski(rx, rx) == doctest::Approx(minkowski(x, x)).epsilon(1e-12));
  CHECK(minkowski(rx, e) == doctest::Approx(-minkowski(x, e)).epsilon(1e-12));
}

TEST_CASE("upper half-space chart at an ideal vertex") {
  TetShape t = linear_diagram(3, 3, 6);
  TetRealization r = realize(t);
  REQUIRE(r.vtype[0] == VertexType::Ideal);
  UpperHalfSpace h = upper_half_space_at(r.vertices[0]);
  CHECK(std::fabs(minkowski(h.L, h.L)) < 1e-9);
  CHECK(minkowski(h.L, h.Lp) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(minkowski(h.u1, h.u1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(minkowski(h.u2, h.u2) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::fabs(minkowski(h.u1, h.u2)) < 1e-9);
  // the three faces through vertex 0 become straight lines; the link
  // triangle they cut has angles equal to the dihedral angles (pi/3, pi/2,
  // pi/6 for [3,3,6])
  auto l1 = h.trace_line(r.normals[1]);
  auto l2 = h.trace_line(r.normals[2]);
  auto l3 = h.trace_line(r.normals[3]);
  auto ang = [](const UpperHalfSpace::Line& a, const UpperHalfSpace::Line& b) {
    double c = -(a.nx * b.nx + a.ny * b.ny);
    return std::acos(std::max(-1.0, std::min(1.0, c)));
  };
  // dihedral angle between faces i and j shows up between their lines
  CHECK(ang(l2, l3) == doctest::Approx(M_PI / 6).epsilon(1e-9));   // {2,3}
  CHECK(ang(l1, l2) == doctest::Approx(M_PI / 3).epsilon(1e-9));   // {1,2}
  CHECK(ang(l1, l3) == doctest::Approx(M_PI / 2).epsilon(1e-9));   // {1,3}
}

TEST_CASE("normal_match_isometry respects shape symmetries") {
  TetShape t = linear_diagram(3, 5, 3);
  TetRealization r = realize(t);
  // path reversal symmetry 0<->3, 1<->2
  Perm4 rev = {3, 2, 1, 0};
  Mat4 g = normal_match_isometry(r, r, rev);
  CHECK(is_minkowski_isometry(g, 1e-8));
  for (int i = 0; i < 4; ++i) {
    Vec4 gn = mat_apply(g, r.normals[i]);
    for (int k = 0; k < 4; ++k) CHECK(gn[k] == doctest::Approx(r.normals[rev[i]][k]).epsilon(1e-8));
  }
}
