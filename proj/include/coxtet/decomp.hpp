#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxtet/catalog.hpp"
#include "coxtet/tiling.hpp"

namespace coxtet {

enum class GlueReason {
  Accepted,
  C1Congruence,    // glued faces not congruent under the matching
  C1Trace,         // 2D interface decompositions fail the mirror condition
  C2FlatCount,     // not exactly two matched edge pairs sum to pi
  C3ApexMismatch,  // apex edges across a flattened pair do not fuse
  C4Reflex,        // third matched pair sums beyond pi
  C5NotHyperbolic,
  VolumeAdditivity,  // numeric invariant violated (engine bug guard)
};

const char* glue_reason_name(GlueReason r);

struct Provenance {
  enum class Kind { Seed, Glue, Expansion } kind = Kind::Seed;
  int m = -1, n = -1;  // member indices within the family closure
  int p = -1, q = -1;  // glued faces of m and n
  std::array<int, 4> face_map{{-1, -1, -1, -1}};  // faces(m) -> faces(n), face_map[p] = q
};

struct DecomposedTet {
  TetShape shape;           // canonical labeling
  std::string fundamental;  // canonical key of the fundamental tile
  int tiles = 1;
  int depth = 2;  // the paper's l; a bare fundamental tetrahedron carries 2
  double volume = 0;
  Provenance prov;                      // canonical derivation
  std::vector<Provenance> derivations;  // every derivation found by the search
  TilingRealization real;               // canonical container frame
  NormalizedTiling norm;
  std::string key;
};

struct GlueOutcome {
  GlueReason reason = GlueReason::Accepted;
  TetShape union_shape;  // canonical labeling (valid when accepted)
  TilingRealization union_real;
  NormalizedTiling norm;
  double union_volume = 0;
};

// Glue d2's face q onto d1's face p under the full face matching
// (face_map[x] = matched face of d2; face_map[p] = q).  Accepts iff
//  C1 the glued faces are congruent and the interface traces mirror-match,
//  C2 exactly two matched edge pairs flatten (sum = pi, exact),
//  C3 across each flattened pair the apex edges fuse (equal angles, exact),
//  C4 the third pair sums below pi,
//  C5 the union is a hyperbolic tetrahedron.
GlueOutcome glue(const DecomposedTet& d1, int p, const DecomposedTet& d2, int q,
                 const std::array<int, 4>& face_map, double tol = 1e-7);

struct SearchParams {
  int max_tiles = 64;
  double tol = 1e-7;
  int jobs = 1;
  bool shuffle = false;  // shuffle candidate processing order (determinism check)
  unsigned seed = 0;
};

struct FamilyClosure {
  TetShape fundamental;  // canonical
  std::string fundamental_key;
  double fundamental_volume = 0;
  // members[0] is the bare fundamental; the rest sorted by (tiles, depth, key)
  std::vector<DecomposedTet> members;
  std::map<GlueReason, long> reject_counts;
};

// Breadth-first closure of the seed under gluing, pruned by the universal
// volume bound and max_tiles; deduplicated geometrically; depths are the
// minimal construction depths.
FamilyClosure search_first_type(const TetShape& fundamental, const SearchParams& params = {});

// Rebuild a member's tiling from its provenance tree alone.
TilingRealization rebuild_from_provenance(const FamilyClosure& closure, int index);

struct CertificationReport {
  bool ok = true;
  int tiles = 0;
  double volume_residual = 0;      // |sum of tile volumes - container volume|
  double max_mirror_residual = 0;  // worst matrix-entry deviation in the mirror checks
  int mirror_violations = 0;
  int overlap_violations = 0;
  int boundary_violations = 0;
  unsigned sample_seed = 0;
  std::string detail;  // first counterexample
};

// Certify a tiling directly: tile volume sum vs container volume, pairwise
// interior disjointness at sampled points, and the facet mirror condition.
CertificationReport certify_tiling(const TilingRealization& t, unsigned seed = 12345,
                                   int samples_per_pair = 32, double tol = 1e-7);

// Replays the provenance tree of closure member `index`, checks the replay
// against the stored tiling, and certifies it.
CertificationReport realize_and_certify(const FamilyClosure& closure, int index,
                                        unsigned seed = 12345, int samples_per_pair = 32);

enum class DecompType { First, Second };

// True when no interior plane passes through the given container edge.
bool edge_is_fundamental(const TilingRealization& t, int i, int j, double tol = 1e-7);
bool all_angles_fundamental(const TilingRealization& t, double tol = 1e-7);

// First if the decomposition is in the inductive closure; Second if every
// container dihedral angle is fundamental.  Anything else throws
// std::logic_error: a third type would break the classification.
DecompType classify_type(const NormalizedTiling& norm, const TilingRealization& real,
                         const FamilyClosure& first_type);

}  // namespace coxtet
