#pragma once

#include "coxtet/decomp.hpp"
#include "coxtet/triangle2d.hpp"

namespace coxtet {

struct FilterRecord {
  std::string name;
  bool passed = true;
  std::string reason;  // the step that eliminated the pair
};

// An ordered catalog pair (F, P) with integer volume ratio, as a candidate
// for a second-type decomposition.
struct CandidatePair {
  int f_index = 0, p_index = 0;  // 1-based catalog indices
  long long ratio = 0;
  std::vector<FilterRecord> filters;
  bool survives = true;
};

// Lemma 1-4 machinery over all ordered same-compactness pairs with integer
// volume ratio >= 2.  Every elimination carries its reason.
std::vector<CandidatePair> filter_pipeline(const std::vector<CatalogEntry>& cat);

struct TessellationResult {
  bool success = false;
  long long expected_tiles = 0;
  int tiles = 0;
  TilingRealization tiling;  // valid on success
  NormalizedTiling norm;
  CertificationReport cert;
  int best_tiles = 0;  // deepest partial expansion over all failed seatings
  std::string failure;
};

// Constructive tessellation check: seat one copy of F on an anchor flag of P
// (a finite-vertex flag, or a cusp link corner with an enumerated link tile
// count), expand by reflections in facet planes keeping tiles inside P, and
// succeed iff the tiles partition P with Vol(P)/Vol(F) tiles.
TessellationResult verify_tessellation(const CatalogEntry& F, const CatalogEntry& P,
                                       int max_tiles = 64);

struct SecondTypeEntry {
  int f_index = 0, p_index = 0;
  long long tiles = 0;
  TessellationResult tess;
};

struct SecondTypeReport {
  std::vector<CandidatePair> pairs;
  std::vector<SecondTypeEntry> tessellations;  // every verified tiling (any type)
  std::vector<SecondTypeEntry> second_type;    // the certified second-type list
};

// The full section-3 pipeline: filters, exhaustive constructive verification
// over every volume-integral pair, and classification of the successes.
// With bounded_only the run is restricted to compact pairs.
SecondTypeReport run_second_type_pipeline(const std::vector<CatalogEntry>& cat,
                                          bool bounded_only = false, int max_tiles = 64);

// Asserting wrapper: the full list must contain exactly two decompositions,
// both with fundamental H_12.  Throws std::logic_error otherwise.
SecondTypeReport second_type_classification(const std::vector<CatalogEntry>& cat);

// The three-planes diagnostic of the (H_11, H_31) elimination: the planes
// opposite the cusp among the nine tiles of the attempted best seating fall
// into three classes; returns the pairwise dihedral angles between classes.
std::vector<double> three_planes_dihedrals(const CatalogEntry& F, const CatalogEntry& P);

}  // namespace coxtet
