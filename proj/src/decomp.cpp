#include "coxtet/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "coxtet/volume.hpp"

namespace coxtet {

const char* glue_reason_name(GlueReason r) {
  switch (r) {
    case GlueReason::Accepted: return "accepted";
    case GlueReason::C1Congruence: return "C1-congruence";
    case GlueReason::C1Trace: return "C1-trace";
    case GlueReason::C2FlatCount: return "C2-flat-count";
    case GlueReason::C3ApexMismatch: return "C3-apex-mismatch";
    case GlueReason::C4Reflex: return "C4-reflex";
    case GlueReason::C5NotHyperbolic: return "C5-not-hyperbolic";
    case GlueReason::VolumeAdditivity: return "volume-additivity";
  }
  return "?";
}

namespace {

std::array<double, 6> shape_angle_values(const TetShape& t) {
  std::array<double, 6> a{};
  for (int k = 0; k < 6; ++k) a[k] = t.a[k].value();
  return a;
}

Vec4 normalize_timelike(Vec4 x) {
  double q = minkowski(x, x);
  x = scale4(x, 1.0 / std::sqrt(-q));
  if (x[3] < 0) x = scale4(x, -1.0);
  return x;
}

// centroid of the facet of `tile` lying on the plane with normal `n`
// (tile normal index `facet`)
Vec4 facet_centroid(const Tile& tile, int facet) {
  TetRealization r = tile_realization(tile);
  Vec4 x{};
  for (int v = 0; v < 4; ++v)
    if (v != facet) x = add4(x, r.vertices[v]);
  return normalize_timelike(x);
}

struct InterfaceFacet {
  int tile_index;
  int facet;  // normal index within the tile
};

std::vector<InterfaceFacet> facets_on_plane(const std::vector<Tile>& tiles, const Vec4& n,
                                            double tol) {
  std::vector<InterfaceFacet> out;
  for (std::size_t i = 0; i < tiles.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      bool close = true;
      for (int k = 0; k < 4 && close; ++k)
        if (std::fabs(tiles[i].normals[f][k] - n[k]) > tol) close = false;
      if (close) out.push_back({static_cast<int>(i), f});
    }
  return out;
}

bool tile_contains(const Tile& t, const Vec4& x, double margin) {
  for (int i = 0; i < 4; ++i)
    if (minkowski(x, t.normals[i]) > margin) return false;
  return true;
}

}  // namespace

GlueOutcome glue(const DecomposedTet& d1, int p, const DecomposedTet& d2, int q,
                 const std::array<int, 4>& face_map, double tol) {
  GlueOutcome out;
  if (face_map[p] != q) throw std::invalid_argument("glue: face_map[p] != q");

  // C2/C4: classify the three matched edge-pair sums exactly
  int flats[2], nflat = 0;
  int third = -1;
  AngleFrac third_sum(1, 2);
  for (int x = 0; x < 4; ++x) {
    if (x == p) continue;
    AngleSum s = angle_add(d1.shape.angle(p, x), d2.shape.angle(q, face_map[x]));
    if (s.kind == AngleSumKind::Flat) {
      if (nflat < 2) flats[nflat] = x;
      ++nflat;
    } else {
      third = x;
      if (s.kind == AngleSumKind::Reflex) {
        out.reason = GlueReason::C4Reflex;
      } else {
        third_sum = s.angle;
      }
    }
  }
  if (nflat != 2) {
    out.reason = GlueReason::C2FlatCount;
    return out;
  }
  if (out.reason == GlueReason::C4Reflex) return out;

  const int a = flats[0], b = flats[1], c = third;
  const int d = face_map[a], e = face_map[b], f = face_map[c];

  // C3: the apex edges across the flattened pairs fuse into straight edges
  if (!(d1.shape.angle(a, b) == d2.shape.angle(d, e))) {
    out.reason = GlueReason::C3ApexMismatch;
    return out;
  }

  // C1 (congruence): matched face corners carry equal planar angles
  for (int x = 0; x < 4; ++x) {
    if (x == p) continue;
    double a1 = face_angle(d1.shape, p, x);
    double a2 = face_angle(d2.shape, q, face_map[x]);
    if (std::fabs(a1 - a2) > 1e-9) {
      out.reason = GlueReason::C1Congruence;
      return out;
    }
  }

  // union shape, temporary labels 0=A(a side), 1=B(b side), 2=c, 3=f
  TetShape u;
  u.angle(0, 1) = d1.shape.angle(a, b);
  u.angle(0, 2) = d1.shape.angle(a, c);
  u.angle(1, 2) = d1.shape.angle(b, c);
  u.angle(0, 3) = d2.shape.angle(d, f);
  u.angle(1, 3) = d2.shape.angle(e, f);
  u.angle(2, 3) = third_sum;

  if (!is_hyperbolic(u)) {
    out.reason = GlueReason::C5NotHyperbolic;
    return out;
  }

  // geometric seating of d2 across d1's face p
  int x1 = -1, x2 = -1;
  for (int x = 0; x < 4; ++x) {
    if (x == p) continue;
    if (x1 < 0)
      x1 = x;
    else if (x2 < 0)
      x2 = x;
  }
  Mat4 g = seat_across(d1.real.container, p, x1, x2, d2.real.container, q, face_map[x1],
                       face_map[x2]);

  // interface mirror condition, tile by tile
  const Vec4& np = d1.real.container.normals[p];
  Vec4 nn = scale4(np, -1.0);
  std::vector<Tile> seated;
  seated.reserve(d2.real.tiles.size());
  for (const auto& t : d2.real.tiles) seated.push_back(transform_tile(g, t));

  auto side1 = facets_on_plane(d1.real.tiles, np, 1e-6);
  auto side2 = facets_on_plane(seated, nn, 1e-6);
  if (side1.size() != side2.size()) {
    out.reason = GlueReason::C1Trace;
    return out;
  }
  for (const auto& fc : side1) {
    const Tile& t1 = d1.real.tiles[fc.tile_index];
    Vec4 x = facet_centroid(t1, fc.facet);
    const Tile* partner = nullptr;
    for (const auto& fc2 : side2) {
      if (tile_contains(seated[fc2.tile_index], x, 1e-7)) {
        partner = &seated[fc2.tile_index];
        break;
      }
    }
    if (!partner || !tile_close(reflect_tile(t1, np), *partner, 1e-6)) {
      out.reason = GlueReason::C1Trace;
      return out;
    }
  }

  // volume additivity (engine invariant)
  double vol_u = tet_volume_general(shape_angle_values(u));
  if (std::fabs(vol_u - d1.volume - d2.volume) > 1e-8) {
    out.reason = GlueReason::VolumeAdditivity;
    return out;
  }

  // union realization in d1's frame, then canonical normalization
  TilingRealization ur;
  std::array<Vec4, 4> un = {d1.real.container.normals[a], d1.real.container.normals[b],
                            d1.real.container.normals[c],
                            mat_apply(g, d2.real.container.normals[f])};
  ur.container = realization_from_normals(un, tol);
  ur.tiles = d1.real.tiles;
  for (auto& t : seated) ur.tiles.push_back(std::move(t));

  out.norm = normalize_tiling(ur, u);
  CanonicalForm cf = canonical_form(u);
  out.union_shape = cf.shape;
  TilingRealization canon;
  canon.container = realize(cf.shape);
  canon.tiles = out.norm.variants.front();
  out.union_real = std::move(canon);
  out.union_volume = vol_u;
  out.reason = GlueReason::Accepted;
  return out;
}

namespace {

DecomposedTet make_seed(const TetShape& fundamental) {
  DecomposedTet s;
  CanonicalForm cf = canonical_form(fundamental);
  s.shape = cf.shape;
  s.fundamental = cf.key;
  s.tiles = 1;
  s.depth = 2;
  s.volume = tet_volume(cf.shape).value;
  s.prov.kind = Provenance::Kind::Seed;
  s.real.container = realize(cf.shape);
  s.real.tiles = {make_tile(s.real.container.normals)};
  s.norm = normalize_tiling(s.real, cf.shape);
  s.key = s.norm.key;
  return s;
}

struct Candidate {
  int i, j, p, q;
  std::array<int, 4> face_map;
};

std::vector<std::array<int, 3>> perms3() {
  std::vector<std::array<int, 3>> v = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return v;
}

std::string face_map_str(const std::array<int, 4>& m) {
  std::string s;
  for (int x : m) s += static_cast<char>('0' + x);
  return s;
}

}  // namespace

FamilyClosure search_first_type(const TetShape& fundamental, const SearchParams& params) {
  FamilyClosure fc;
  CanonicalForm cf = canonical_form(fundamental);
  fc.fundamental = cf.shape;
  fc.fundamental_key = cf.key;

  DecomposedTet seed = make_seed(fundamental);
  fc.fundamental_volume = seed.volume;
  int cap = params.max_tiles;
  int vol_cap = static_cast<int>(std::floor((max_tet_volume() + 1e-9) / seed.volume));
  if (vol_cap < cap) cap = vol_cap;

  std::vector<DecomposedTet> mem;
  mem.push_back(std::move(seed));

  const auto sigma3 = perms3();

  auto enumerate_candidates = [&](std::size_t isize, std::size_t jsize) {
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < isize; ++i)
      for (std::size_t j = 0; j < jsize; ++j) {
        if (mem[i].tiles + mem[j].tiles > cap) continue;
        for (int p = 0; p < 4; ++p)
          for (int q = 0; q < 4; ++q) {
            int rest1[3], r1 = 0, rest2[3], r2 = 0;
            for (int x = 0; x < 4; ++x) {
              if (x != p) rest1[r1++] = x;
              if (x != q) rest2[r2++] = x;
            }
            for (const auto& s : sigma3) {
              Candidate c;
              c.i = static_cast<int>(i);
              c.j = static_cast<int>(j);
              c.p = p;
              c.q = q;
              c.face_map = {-1, -1, -1, -1};
              c.face_map[p] = q;
              for (int k = 0; k < 3; ++k) c.face_map[rest1[k]] = rest2[s[k]];
              cands.push_back(c);
            }
          }
      }
    if (params.shuffle) {
      std::mt19937 rng(params.seed ? params.seed : 0x5eed);
      std::shuffle(cands.begin(), cands.end(), rng);
    }
    return cands;
  };

  struct EvalResult {
    Candidate cand;
    GlueOutcome outcome;
  };

  auto evaluate = [&](const std::vector<Candidate>& cands) {
    std::vector<EvalResult> results(cands.size());
    int jobs = params.jobs > 0 ? params.jobs : 1;
    if (jobs == 1) {
      for (std::size_t k = 0; k < cands.size(); ++k)
        results[k] = {cands[k], glue(mem[cands[k].i], cands[k].p, mem[cands[k].j], cands[k].q,
                                     cands[k].face_map, params.tol)};
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
          for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= cands.size()) break;
            results[k] = {cands[k], glue(mem[cands[k].i], cands[k].p, mem[cands[k].j],
                                         cands[k].q, cands[k].face_map, params.tol)};
          }
        });
      for (auto& t : pool) t.join();
    }
    return results;
  };

  auto find_class = [&](const GlueOutcome& o, int ntiles) -> int {
    for (std::size_t k = 0; k < mem.size(); ++k) {
      if (mem[k].tiles != ntiles) continue;
      if (same_decomposition(mem[k].norm, o.norm, 1e-6)) return static_cast<int>(k);
    }
    return -1;
  };

  // phase 1: grow to closure
  std::size_t frontier = 0;
  while (frontier < mem.size()) {
    std::size_t known = mem.size();
    auto cands = enumerate_candidates(known, known);
    // drop pairs fully inside the already-processed block
    std::vector<Candidate> fresh;
    for (const auto& c : cands)
      if (static_cast<std::size_t>(c.i) >= frontier || static_cast<std::size_t>(c.j) >= frontier)
        fresh.push_back(c);
    frontier = known;
    auto results = evaluate(fresh);
    // merge deterministically: sort by candidate order already preserved
    for (auto& r : results) {
      if (r.outcome.reason != GlueReason::Accepted) continue;
      int ntiles = mem[r.cand.i].tiles + mem[r.cand.j].tiles;
      if (find_class(r.outcome, ntiles) >= 0) continue;
      DecomposedTet d;
      d.shape = r.outcome.union_shape;
      d.fundamental = fc.fundamental_key;
      d.tiles = ntiles;
      d.depth = 1 + std::max(mem[r.cand.i].depth, mem[r.cand.j].depth);
      d.volume = r.outcome.union_volume;
      d.prov = {Provenance::Kind::Glue, r.cand.i, r.cand.j, r.cand.p, r.cand.q, r.cand.face_map};
      d.real = std::move(r.outcome.union_real);
      d.norm = std::move(r.outcome.norm);
      d.key = d.norm.key;
      mem.push_back(std::move(d));
    }
  }

  // phase 2: full derivation/statistics pass
  {
    auto cands = enumerate_candidates(mem.size(), mem.size());
    auto results = evaluate(cands);
    for (auto& r : results) {
      ++fc.reject_counts[r.outcome.reason];
      if (r.outcome.reason != GlueReason::Accepted) continue;
      int k = find_class(r.outcome, mem[r.cand.i].tiles + mem[r.cand.j].tiles);
      if (k < 0) throw std::logic_error("search_first_type: closure not closed");
      mem[k].derivations.push_back(
          {Provenance::Kind::Glue, r.cand.i, r.cand.j, r.cand.p, r.cand.q, r.cand.face_map});
    }
  }

  // phase 3: minimal construction depth (seeds stay at 2)
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& d : mem) {
      for (const auto& dv : d.derivations) {
        int cand = 1 + std::max(mem[dv.m].depth, mem[dv.n].depth);
        if (cand < d.depth) {
          d.depth = cand;
          changed = true;
        }
      }
    }
  }

  // phase 4: canonical finalize, ascending tile count
  std::vector<int> order(mem.size());
  for (std::size_t k = 0; k < mem.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (mem[x].tiles != mem[y].tiles) return mem[x].tiles < mem[y].tiles;
    return x < y;
  });

  std::vector<int> final_index(mem.size(), -1);
  std::vector<DecomposedTet> fin;
  fin.reserve(mem.size());

  std::size_t pos = 0;
  while (pos < order.size()) {
    std::size_t end = pos;
    while (end < order.size() && mem[order[end]].tiles == mem[order[pos]].tiles) ++end;
    struct Rebuilt {
      int old;
      DecomposedTet d;
      std::string sort_key;
    };
    std::vector<Rebuilt> group;
    for (std::size_t t = pos; t < end; ++t) {
      int old = order[t];
      DecomposedTet d = mem[old];
      if (d.prov.kind == Provenance::Kind::Glue) {
        // canonical derivation: minimal by (max sub-depth, sub-keys, faces, map)
        auto better = [&](const Provenance& aP, const Provenance& bP) {
          auto tup = [&](const Provenance& pr) {
            return std::make_tuple(std::max(mem[pr.m].depth, mem[pr.n].depth),
                                   fin[final_index[pr.m]].key, fin[final_index[pr.n]].key, pr.p,
                                   pr.q, face_map_str(pr.face_map));
          };
          return tup(aP) < tup(bP);
        };
        const Provenance* best = nullptr;
        for (const auto& dv : d.derivations) {
          if (1 + std::max(mem[dv.m].depth, mem[dv.n].depth) != d.depth) continue;
          if (!best || better(dv, *best)) best = &dv;
        }
        if (!best) throw std::logic_error("search_first_type: no depth-minimal derivation");
        Provenance canon = *best;
        canon.m = final_index[best->m];
        canon.n = final_index[best->n];
        // deterministic rebuild from finalized members
        GlueOutcome o = glue(fin[canon.m], canon.p, fin[canon.n], canon.q, canon.face_map,
                             params.tol);
        if (o.reason != GlueReason::Accepted)
          throw std::logic_error("search_first_type: canonical rebuild failed");
        d.prov = canon;
        d.real = std::move(o.union_real);
        d.norm = std::move(o.norm);
        d.key = d.norm.key;
        d.volume = o.union_volume;
        // remap all derivations to final indices
        for (auto& dv : d.derivations) {
          dv.m = final_index[dv.m];
          dv.n = final_index[dv.n];
        }
      }
      Rebuilt rb;
      rb.old = old;
      std::ostringstream sk;
      sk << d.depth << '|' << d.key;
      rb.sort_key = sk.str();
      rb.d = std::move(d);
      group.push_back(std::move(rb));
    }
    std::sort(group.begin(), group.end(),
              [](const Rebuilt& x, const Rebuilt& y) { return x.sort_key < y.sort_key; });
    for (auto& rb : group) {
      final_index[rb.old] = static_cast<int>(fin.size());
      fin.push_back(std::move(rb.d));
    }
    pos = end;
  }

  fc.members = std::move(fin);
  return fc;
}

TilingRealization rebuild_from_provenance(const FamilyClosure& closure, int index) {
  const DecomposedTet& d = closure.members[index];
  if (d.prov.kind == Provenance::Kind::Seed) {
    TilingRealization r;
    r.container = realize(d.shape);
    r.tiles = {make_tile(r.container.normals)};
    return r;
  }
  if (d.prov.kind == Provenance::Kind::Glue) {
    GlueOutcome o = glue(closure.members[d.prov.m], d.prov.p, closure.members[d.prov.n],
                         d.prov.q, d.prov.face_map);
    if (o.reason != GlueReason::Accepted)
      throw std::logic_error("rebuild_from_provenance: glue replay failed");
    return o.union_real;
  }
  throw std::logic_error("rebuild_from_provenance: expansion members rebuild elsewhere");
}

CertificationReport certify_tiling(const TilingRealization& t, unsigned seed,
                                   int samples_per_pair, double tol) {
  CertificationReport rep;
  rep.tiles = static_cast<int>(t.tiles.size());
  rep.sample_seed = seed;

  // (a) volume additivity
  double sum = 0;
  for (const auto& tile : t.tiles) sum += tile_volume(tile);
  double cont = tet_volume_general([&] {
    std::array<double, 6> a{};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        double c = -minkowski(t.container.normals[i], t.container.normals[j]);
        if (c > 1.0) c = 1.0;
        if (c < -1.0) c = -1.0;
        a[TetShape::pair_index(i, j)] = std::acos(c);
      }
    return a;
  }());
  rep.volume_residual = std::fabs(sum - cont);
  if (rep.volume_residual > 1e-6 * rep.tiles) {
    rep.ok = false;
    rep.detail = "volume sum residual " + std::to_string(rep.volume_residual);
  }

  // (b) pairwise interior disjointness at sampled points
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.05, 1.0);
  std::vector<std::vector<Vec4>> samples(t.tiles.size());
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    TetRealization r = tile_realization(t.tiles[i]);
    for (int s = 0; s < samples_per_pair; ++s) {
      std::array<double, 4> w = {uni(rng), uni(rng), uni(rng), uni(rng)};
      samples[i].push_back(interior_point(r, w));
    }
  }
  for (std::size_t i = 0; i < t.tiles.size(); ++i)
    for (std::size_t j = 0; j < t.tiles.size(); ++j) {
      if (i == j) continue;
      for (const auto& x : samples[i])
        if (tile_contains(t.tiles[j], x, -1e-7)) {
          ++rep.overlap_violations;
          if (rep.detail.empty())
            rep.detail = "tiles " + std::to_string(i) + "," + std::to_string(j) + " overlap";
          break;
        }
    }

  // (c) every facet lies on the container boundary or mirrors onto a partner
  auto tile_deviation = [](const Tile& a, const Tile& b) {
    double worst = 0;
    bool used[4] = {};
    for (int i = 0; i < 4; ++i) {
      int bestj = -1;
      double bestd = 1e9;
      for (int j = 0; j < 4; ++j) {
        if (used[j]) continue;
        double d = 0;
        for (int k = 0; k < 4; ++k) d = std::max(d, std::fabs(a.normals[i][k] - b.normals[j][k]));
        if (d < bestd) {
          bestd = d;
          bestj = j;
        }
      }
      used[bestj] = true;
      worst = std::max(worst, bestd);
    }
    return worst;
  };
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      const Vec4& n = t.tiles[i].normals[f];
      bool boundary = false;
      for (int cf = 0; cf < 4; ++cf) {
        bool close = true;
        for (int k = 0; k < 4 && close; ++k)
          if (std::fabs(n[k] - t.container.normals[cf][k]) > 1e-6) close = false;
        if (close) boundary = true;
      }
      if (boundary) continue;
      Tile mirrored = reflect_tile(t.tiles[i], n);
      double best = 1e9;
      for (std::size_t j = 0; j < t.tiles.size(); ++j) {
        if (j == i) continue;
        best = std::min(best, tile_deviation(mirrored, t.tiles[j]));
      }
      if (best <= 1e-8) {
        rep.max_mirror_residual = std::max(rep.max_mirror_residual, best);
      } else {
        // the facet might exit through the container boundary; its interior
        // centroid decides
        Vec4 x = facet_centroid(t.tiles[i], f);
        if (point_inside(t.container, x, 1e-7)) {
          ++rep.mirror_violations;
          rep.max_mirror_residual = std::max(rep.max_mirror_residual, best);
          if (rep.detail.empty())
            rep.detail = "tile " + std::to_string(i) + " facet " + std::to_string(f) +
                         " lacks a mirror partner (residual " + std::to_string(best) + ")";
        } else {
          ++rep.boundary_violations;
          if (rep.detail.empty())
            rep.detail = "tile " + std::to_string(i) + " facet " + std::to_string(f) +
                         " leaves the container";
        }
      }
    }
  }
  if (rep.mirror_violations || rep.overlap_violations || rep.boundary_violations) rep.ok = false;
  return rep;
}

CertificationReport realize_and_certify(const FamilyClosure& closure, int index, unsigned seed,
                                        int samples_per_pair) {
  const DecomposedTet& d = closure.members[index];
  TilingRealization replay = rebuild_from_provenance(closure, index);
  CertificationReport rep = certify_tiling(replay, seed, samples_per_pair);
  if (!tiles_equal(replay.tiles, d.real.tiles, 1e-6)) {
    rep.ok = false;
    rep.detail = "provenance replay disagrees with the stored tiling";
  }
  return rep;
}

bool edge_is_fundamental(const TilingRealization& t, int i, int j, double tol) {
  // the edge i^j joins the two vertices opposite the other faces
  int k = -1, l = -1;
  for (int x = 0; x < 4; ++x)
    if (x != i && x != j) (k < 0 ? k : l) = x;
  const Vec4& vk = t.container.vertices[k];
  const Vec4& vl = t.container.vertices[l];
  for (const auto& m : interior_planes(t, tol)) {
    if (std::fabs(minkowski(vk, m)) < 1e-6 && std::fabs(minkowski(vl, m)) < 1e-6) return false;
  }
  return true;
}

bool all_angles_fundamental(const TilingRealization& t, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!edge_is_fundamental(t, i, j, tol)) return false;
  return true;
}

DecompType classify_type(const NormalizedTiling& norm, const TilingRealization& real,
                         const FamilyClosure& first_type) {
  for (const auto& m : first_type.members)
    if (same_decomposition(m.norm, norm, 1e-6)) return DecompType::First;
  if (all_angles_fundamental(real)) return DecompType::Second;
  throw std::logic_error("classify_type: decomposition of the third type detected");
}

}  // namespace coxtet
