#pragma once

#include <optional>

#include "coxtet/catalog.hpp"
#include "coxtet/tiling.hpp"

namespace coxtet {

using Triple = std::array<AngleFrac, 3>;

Geometry2D triangle_geometry(const Triple& t);

// A Coxeter decomposition of a spherical, Euclidean or hyperbolic triangle.
struct TriangleDecomp {
  Geometry2D geometry = Geometry2D::Euclidean;
  std::array<double, 3> outer{};        // outer corner angles (descending)
  std::array<double, 3> fundamental{};  // tile corner angles (descending)
  int tiles = 1;
  bool second_type = true;  // no mirror through any outer corner
  std::array<std::vector<double>, 3> side_patterns;  // division coordinates per side
  std::string key;
};

// Exhaustive list of triangle Coxeter decompositions with at most max_tiles
// tiles.  `fundamental` empty ranges over every feasible Coxeter triangle of
// that geometry with labels <= max_label.  Spherical and Euclidean only;
// hyperbolic triangle lists are unbounded, use
// triangle_decomposition_exists for hyperbolic queries.
std::vector<TriangleDecomp> search_triangle_decompositions(
    Geometry2D geometry, const std::optional<Triple>& fundamental, int max_tiles,
    bool second_type_only, int max_label = 6);

// Does the triangle `outer` admit a Coxeter decomposition of the second type
// with fundamental triangle `fundamental`?  Both triples must live in one
// geometry.  Euclidean searches are capped at `cap` tiles; spherical and
// hyperbolic ones are bounded by the area ratio.
bool triangle_decomposition_exists(const Triple& fundamental, const Triple& outer,
                                   int cap = 64);

// Induced decomposition of the vertex link of container vertex v: spherical
// for a finite vertex, Euclidean for an ideal one.
TriangleDecomp link_decomposition(const TilingRealization& t, int v, double tol = 1e-6);

// Seeded reflection expansion inside a hyperbolic triangle, in R^{2,1}
// coordinates (form +,+,-).  Sides are outward unit spacelike normals.
struct H2Expansion {
  bool ok = false;
  std::vector<std::array<Vec3, 3>> chambers;  // canonical-sorted side normals
};
H2Expansion expand_hyperbolic_triangle(const std::array<Vec3, 3>& container,
                                       const std::array<Vec3, 3>& seed, int cap);

}  // namespace coxtet
