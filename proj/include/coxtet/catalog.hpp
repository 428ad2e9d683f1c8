#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxtet/canonical.hpp"
#include "coxtet/shape.hpp"
#include "coxtet/volume.hpp"

namespace coxtet {

enum class Geometry2D { Spherical, Euclidean, Hyperbolic };

// A hyperbolic Coxeter tetrahedron H_i.
struct CatalogEntry {
  std::string id;          // "H_1"...
  int index = 0;           // 1-based position in the catalog ordering
  TetShape diagram;        // canonical labeling, all numerators 1
  bool compact = false;
  VolumeValue volume;
  std::string canonical_key;
  bool fig2_family = false;  // has a (pi/3,pi/3,pi/3) subdiagram
};

// All hyperbolic Coxeter tetrahedra with labels up to max_label, deduplicated
// and named H_1.. sorted by (compact first, volume ascending, key).
std::vector<CatalogEntry> enumerate_coxeter_tetrahedra(int max_label = 10);

struct SubdiagramTriangle {
  int omitted_node;
  std::array<AngleFrac, 3> angles;  // labels of the remaining rank-3 diagram
  Geometry2D geometry;
};

std::array<SubdiagramTriangle, 4> subdiagram_triangles(const TetShape& t);

const CatalogEntry* find_by_key(const std::vector<CatalogEntry>& cat, const std::string& key);

// The tetrahedra the paper's section-3 case analysis names explicitly,
// re-anchored by their defining constraints rather than by table position.
struct PaperActors {
  int h1 = -1;   // compact of minimal volume
  int h3 = -1;   // partner of h1 in the unique compact integer-ratio pair
  int h10 = -1;  // [3,3,6]: unbounded, unique ideal vertex, 24*vol = vol(h32)
  int h11 = -1;  // [3,4,4]: F of the unique unbounded (4,4,2)-link pair, ratio 12
  int h12 = -1;  // triangle(3,3,3) + pi/3 tail, no angle pi/4, pi/5, pi/6
  int h17 = -1, h22 = -1, h26 = -1;  // the same family with tails pi/4, pi/5, pi/6
  int h24 = -1;  // all-pi/3 diagram minus one edge
  int h31 = -1;  // the (4,4,4,4) cycle: P of the ratio-12 pair
  int h32 = -1;  // all six angles pi/3
};

PaperActors identify_paper_actors(const std::vector<CatalogEntry>& cat);

}  // namespace coxtet
