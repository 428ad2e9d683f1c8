#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxtet/realize.hpp"

namespace coxtet {

std::int64_t quant(double x);  // round to the 1e-6 grid

// A tile: four outward unit spacelike face normals, kept in a canonical
// intra-tile order (quantized lexicographic) so tiles compare as plane sets.
struct Tile {
  std::array<Vec4, 4> normals;
};

Tile make_tile(std::array<Vec4, 4> normals);
Tile transform_tile(const Mat4& g, const Tile& t);
Tile reflect_tile(const Tile& t, const Vec4& plane);
bool tile_close(const Tile& a, const Tile& b, double tol);

// vertices of a tile (vertex k opposite normal k), normalized as in
// TetRealization
TetRealization tile_realization(const Tile& t, double tol = 1e-7);

// dihedral angles read back from the normals, slot order as TetShape
std::array<double, 6> tile_angles(const Tile& t);
double tile_volume(const Tile& t);  // general volume formula on tile_angles

// a point strictly inside the tile
Vec4 tile_center(const Tile& t);

// A container tetrahedron together with the tiles of a decomposition,
// everything in one frame.
struct TilingRealization {
  TetRealization container;
  std::vector<Tile> tiles;
};

TilingRealization transform_tiling(const Mat4& g, const TilingRealization& t);

// multiset equality of tiles within tolerance
bool tiles_equal(const std::vector<Tile>& a, const std::vector<Tile>& b, double tol);

std::string serialize_tiles(const std::vector<Tile>& tiles);

// isometry mapping realization src onto dst with face i -> perm[i]
// (requires matching Grams up to the permutation)
Mat4 normal_match_isometry(const TetRealization& src, const TetRealization& dst,
                           const Perm4& perm);

// Tiling in the standard frame of the canonical container shape, one variant
// per canonicalizing permutation; key = minimal serialization.
struct NormalizedTiling {
  TetShape canonical_shape;
  std::vector<std::vector<Tile>> variants;
  std::string key;
};

NormalizedTiling normalize_tiling(const TilingRealization& t, const TetShape& shape);

bool same_decomposition(const NormalizedTiling& a, const NormalizedTiling& b, double tol);

// interior planes of the tiling (tile facet planes that are not container
// faces), deduplicated projectively; normals sign-canonicalized
std::vector<Vec4> interior_planes(const TilingRealization& t, double tol = 1e-7);

// 2D decomposition induced on a container face
struct TraceTile {
  std::array<Vec4, 3> corners;       // on the face plane
  std::array<double, 3> angles;      // 2D corner angles
  int tile_index;                    // which 3D tile
  int f_face;                        // which face of the tile lies on the plane
};

struct FaceTrace {
  int face;
  std::array<double, 3> outer_angles;  // at the three container vertices on the face, ascending vertex order
  std::vector<TraceTile> tiles2d;
  // per side (indexed by the opposite-face label in ascending order):
  // signed arc-length coordinates of the interior division points
  std::array<std::vector<double>, 3> side_patterns;
};

FaceTrace extract_face_trace(const TilingRealization& t, int face, double tol = 1e-7);

}  // namespace coxtet
