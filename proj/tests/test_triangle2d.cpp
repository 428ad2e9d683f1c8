#include "doctest.h"

#include <cmath>
#include <set>

#include "coxtet/decomp.hpp"
#include "coxtet/triangle2d.hpp"

using namespace coxtet;

namespace {

Triple tri(int a, int b, int c) { return {AngleFrac(1, a), AngleFrac(1, b), AngleFrac(1, c)}; }

bool has_outer(const std::vector<TriangleDecomp>& list, std::array<double, 3> outer, int n) {
  std::sort(outer.rbegin(), outer.rend());
  for (const auto& td : list) {
    if (td.tiles != n) continue;
    bool same = true;
    for (int i = 0; i < 3; ++i)
      if (std::fabs(td.outer[i] - outer[i]) > 1e-8) same = false;
    if (same) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("triangle geometry classification") {
  CHECK(triangle_geometry(tri(2, 3, 5)) == Geometry2D::Spherical);
  CHECK(triangle_geometry(tri(3, 3, 3)) == Geometry2D::Euclidean);
  CHECK(triangle_geometry(tri(2, 4, 4)) == Geometry2D::Euclidean);
  CHECK(triangle_geometry(tri(2, 3, 6)) == Geometry2D::Euclidean);
  CHECK(triangle_geometry(tri(2, 3, 7)) == Geometry2D::Hyperbolic);
}

TEST_CASE("spherical second type: exactly one, 15 tiles, fundamental with pi/5") {
  auto list = search_triangle_decompositions(Geometry2D::Spherical, std::nullopt, 200, true);
  REQUIRE(list.size() == 1);
  CHECK(list[0].tiles == 15);
  CHECK(list[0].fundamental[2] == doctest::Approx(M_PI / 5).epsilon(1e-10));
  CHECK(list[0].fundamental[1] == doctest::Approx(M_PI / 3).epsilon(1e-10));
  CHECK(list[0].fundamental[0] == doctest::Approx(M_PI / 2).epsilon(1e-10));
  // the container is the right-angled octant triangle
  for (int i = 0; i < 3; ++i) CHECK(list[0].outer[i] == doctest::Approx(M_PI / 2).epsilon(1e-10));
  CHECK(list[0].second_type);
}

TEST_CASE("spherical second-type list is stable up to 60 tiles") {
  auto list = search_triangle_decompositions(Geometry2D::Spherical, std::nullopt, 60, true);
  CHECK(list.size() == 1);
}

TEST_CASE("Euclidean second type with at most 24 tiles: exactly five") {
  auto list = search_triangle_decompositions(Geometry2D::Euclidean, std::nullopt, 24, true);
  REQUIRE(list.size() == 5);
  // all-(pi/3) outer cases appear with n = 4, 9 and 16
  std::array<double, 3> eq = {M_PI / 3, M_PI / 3, M_PI / 3};
  CHECK(has_outer(list, eq, 4));
  CHECK(has_outer(list, eq, 9));
  CHECK(has_outer(list, eq, 16));
  // the (pi/2,pi/4,pi/4) container with 9 tiles
  CHECK(has_outer(list, {M_PI / 2, M_PI / 4, M_PI / 4}, 9));
  // the equilateral container cut into 18 (pi/2,pi/3,pi/6) tiles
  CHECK(has_outer(list, eq, 18));
  for (const auto& td : list) CHECK(td.second_type);
  std::multiset<int> tiles;
  for (const auto& td : list) tiles.insert(td.tiles);
  CHECK(tiles == std::multiset<int>{4, 9, 9, 16, 18});
}

TEST_CASE("first-type 2D decompositions exist but carry corner mirrors") {
  auto all = search_triangle_decompositions(Geometry2D::Euclidean, tri(2, 3, 6), 24, false);
  bool found_non_second = false;
  for (const auto& td : all)
    if (!td.second_type) found_non_second = true;
  CHECK(found_non_second);
  auto strict = search_triangle_decompositions(Geometry2D::Euclidean, tri(2, 3, 6), 24, true);
  for (const auto& td : strict) CHECK(td.second_type);
  CHECK(strict.size() < all.size());
}

TEST_CASE("triangle decomposition existence queries") {
  // trivial: fundamental equals outer
  CHECK(triangle_decomposition_exists(tri(2, 3, 5), tri(2, 3, 5)));
  // (pi/4,pi/4,pi/2) Euclidean outer tiled by itself in 9 tiles
  CHECK(triangle_decomposition_exists(tri(2, 4, 4), tri(2, 4, 4)));
  // equilateral by (2,3,6) tiles (the 18-tile pattern)
  CHECK(triangle_decomposition_exists(tri(2, 3, 6), tri(3, 3, 3)));
  // mismatched geometries throw
  CHECK_THROWS_AS(triangle_decomposition_exists(tri(3, 3, 3), tri(2, 3, 5)), std::domain_error);
  // spherical: area not an integer multiple
  CHECK(!triangle_decomposition_exists(tri(2, 3, 3), tri(2, 3, 4)));
  // hyperbolic: area mismatch gives false
  CHECK(!triangle_decomposition_exists(tri(2, 3, 7), tri(2, 3, 8)));
  // hyperbolic doubling across a corner mirror is not second type
  CHECK(!triangle_decomposition_exists(tri(2, 3, 8), tri(3, 8, 8)));
}

TEST_CASE("link decompositions of first-type members") {
  FamilyClosure fc = search_first_type(linear_diagram(3, 3, 6));
  for (int v = 0; v < 4; ++v) {
    TriangleDecomp td = link_decomposition(fc.members[0].real, v);
    CHECK(td.tiles == 1);
  }
  // a 2-tile member: the two apexes keep trivial links, the glued-face
  // vertices carry 2-tile links
  const DecomposedTet& d = fc.members[1];
  std::multiset<int> counts;
  for (int v = 0; v < 4; ++v) counts.insert(link_decomposition(d.real, v).tiles);
  CHECK(counts == std::multiset<int>{1, 1, 2, 2});
}

TEST_CASE("hyperbolic expansion reproduces face traces") {
  FamilyClosure fc = search_first_type(linear_diagram(3, 4, 4));
  const DecomposedTet* d = nullptr;
  for (const auto& m : fc.members)
    if (m.tiles == 4) d = &m;
  REQUIRE(d != nullptr);
  for (int face = 0; face < 4; ++face) {
    FaceTrace tr = extract_face_trace(d->real, face);
    REQUIRE(!tr.tiles2d.empty());
    int corners[3], rr = 0;
    for (int x = 0; x < 4; ++x)
      if (x != face) corners[rr++] = x;
    Mat4 fr = face_frame(d->real.container, face, corners[0], corners[1]);
    Vec4 f1 = {fr[0][0], fr[1][0], fr[2][0], fr[3][0]};
    Vec4 f2 = {fr[0][1], fr[1][1], fr[2][1], fr[3][1]};
    Vec4 tc = {fr[0][3], fr[1][3], fr[2][3], fr[3][3]};
    auto to2 = [&](const Vec4& x) {
      return Vec3{minkowski(x, f1), minkowski(x, f2), -minkowski(x, tc)};
    };
    auto inplane_normal = [&](const Vec4& nrm) {
      const Vec4& n = d->real.container.normals[face];
      Vec4 m = sub4(nrm, scale4(n, minkowski(nrm, n)));
      double q = std::sqrt(minkowski(m, m));
      return to2(scale4(m, 1.0 / q));
    };
    std::array<Vec3, 3> container_sides;
    for (int i = 0; i < 3; ++i) container_sides[i] = inplane_normal(d->real.container.normals[corners[i]]);
    const Tile& t0 = d->real.tiles[tr.tiles2d[0].tile_index];
    std::array<Vec3, 3> seed;
    int k = 0;
    for (int ff = 0; ff < 4; ++ff)
      if (ff != tr.tiles2d[0].f_face) seed[k++] = inplane_normal(t0.normals[ff]);
    H2Expansion ex = expand_hyperbolic_triangle(container_sides, seed, 64);
    REQUIRE(ex.ok);
    CHECK(ex.chambers.size() == tr.tiles2d.size());
  }
}

TEST_CASE("hyperbolic list requests are rejected") {
  CHECK_THROWS_AS(
      search_triangle_decompositions(Geometry2D::Hyperbolic, std::nullopt, 10, true),
      std::invalid_argument);
}
