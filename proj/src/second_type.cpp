#include "coxtet/second_type.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxtet {

namespace {

std::string tile_id(const Tile& t) {
  std::string s;
  for (const auto& n : t.normals)
    for (int k = 0; k < 4; ++k) {
      s += std::to_string(quant(n[k]));
      s += ',';
    }
  return s;
}

Vec4 facet_centroid_of(const Tile& t, int facet) {
  TetRealization r = tile_realization(t);
  Vec4 x{};
  for (int v = 0; v < 4; ++v)
    if (v != facet) x = add4(x, r.vertices[v]);
  double q = minkowski(x, x);
  x = scale4(x, 1.0 / std::sqrt(-q));
  if (x[3] < 0) x = scale4(x, -1.0);
  return x;
}

// frame [edge-tangent, in-face, face-normal, vertex] at the finite vertex w
// along the flag (edge x^y, face x)
Mat4 corner_frame(const TetRealization& r, int w, int x, int y) {
  const Vec4& W = r.vertices[w];
  Vec4 t = minkowski_orthogonal(r.normals[x], r.normals[y], W);
  t = scale4(t, 1.0 / std::sqrt(minkowski(t, t)));
  int other = -1;
  for (int i = 0; i < 4; ++i)
    if (i != x && i != y && i != w) other = i;
  if (minkowski(t, r.vertices[other]) < 0) t = scale4(t, -1.0);
  Vec4 u2 = minkowski_orthogonal(t, r.normals[x], W);
  u2 = scale4(u2, 1.0 / std::sqrt(minkowski(u2, u2)));
  if (minkowski(u2, r.normals[y]) > 0) u2 = scale4(u2, -1.0);
  Mat4 f{};
  for (int i = 0; i < 4; ++i) {
    f[i][0] = t[i];
    f[i][1] = u2[i];
    f[i][2] = r.normals[x][i];
    f[i][3] = W[i];
  }
  return f;
}

struct Expansion {
  bool ok = false;
  std::vector<Tile> tiles;
  int placed = 0;
  std::string failure;
};

Expansion expand_in_container(const TetRealization& P, const Tile& seed, long long cap) {
  Expansion ex;
  Vec4 c0 = tile_center(seed);
  if (!point_inside(P, c0, 1e-9)) {
    ex.failure = "seed outside container";
    return ex;
  }
  std::set<std::string> seen{tile_id(seed)};
  std::vector<Tile> queue{seed};
  std::vector<Tile> acc;
  while (!queue.empty()) {
    Tile t = queue.back();
    queue.pop_back();
    acc.push_back(t);
    ex.placed = static_cast<int>(acc.size());
    if (static_cast<long long>(acc.size()) > cap) {
      ex.failure = "expansion exceeds the expected tile count";
      return ex;
    }
    for (int f = 0; f < 4; ++f) {
      const Vec4& n = t.normals[f];
      bool boundary = false;
      for (int k = 0; k < 4 && !boundary; ++k) {
        bool close = true;
        for (int c = 0; c < 4 && close; ++c)
          if (std::fabs(n[c] - P.normals[k][c]) > 1e-6) close = false;
        boundary = close;
      }
      if (boundary) continue;
      Vec4 x = facet_centroid_of(t, f);
      if (!point_inside(P, x, 1e-9)) {
        ex.failure = "a tile facet leaves the container";
        return ex;
      }
      Tile refl = reflect_tile(t, n);
      Vec4 rc = tile_center(refl);
      if (!point_inside(P, rc, 1e-9)) {
        ex.failure = "a mirror partner escapes the container";
        return ex;
      }
      if (seen.insert(tile_id(refl)).second) queue.push_back(refl);
    }
  }
  ex.ok = true;
  ex.tiles = std::move(acc);
  return ex;
}

struct ELine2 {
  double nx, ny, c;
};

std::array<double, 2> meet(const ELine2& a, const ELine2& b) {
  double det = a.nx * b.ny - a.ny * b.nx;
  return {(a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det};
}

struct CuspChart {
  UpperHalfSpace h;
  std::array<ELine2, 3> lines;                   // link triangle sides, outward
  std::array<int, 3> faces;                      // the face behind each side
  std::array<std::array<double, 2>, 3> corners;  // corner k opposite side k
  double area = 0;
};

CuspChart cusp_chart(const TetRealization& r, int w) {
  CuspChart cc;
  cc.h = upper_half_space_at(r.vertices[w]);
  int k = 0;
  for (int f = 0; f < 4; ++f) {
    if (f == w) continue;
    auto l = cc.h.trace_line(r.normals[f]);
    cc.lines[k] = {l.nx, l.ny, l.c};
    cc.faces[k] = f;
    ++k;
  }
  for (int c = 0; c < 3; ++c) cc.corners[c] = meet(cc.lines[(c + 1) % 3], cc.lines[(c + 2) % 3]);
  cc.area =
      std::fabs((cc.corners[1][0] - cc.corners[0][0]) * (cc.corners[2][1] - cc.corners[0][1]) -
                (cc.corners[2][0] - cc.corners[0][0]) * (cc.corners[1][1] - cc.corners[0][1])) /
      2;
  return cc;
}

// similarity z -> A_p + s * R (z - A_f), with R a rotation, possibly composed
// with a reflection
struct Similarity {
  double s;
  double r00, r01, r10, r11;
  std::array<double, 2> af, ap;
  std::array<double, 2> apply(const std::array<double, 2>& z) const {
    double x = z[0] - af[0], y = z[1] - af[1];
    return {ap[0] + s * (r00 * x + r01 * y), ap[1] + s * (r10 * x + r11 * y)};
  }
  ELine2 apply_line(const ELine2& l) const {
    double nx = r00 * l.nx + r01 * l.ny;
    double ny = r10 * l.nx + r11 * l.ny;
    std::array<double, 2> p = {l.c * l.nx, l.c * l.ny};
    auto q = apply(p);
    return {nx, ny, nx * q[0] + ny * q[1]};
  }
};

// seat the tile's cusp link into the container's: corner cf onto corner cp at
// scale s, f's side sf along p's side sp, tile on the interior side
Similarity corner_similarity(const CuspChart& pc, int cp, int sp, const CuspChart& fc, int cf,
                             int sf, double s) {
  auto dir_along = [](const CuspChart& c, int corner, int side) {
    const auto& a = c.corners[corner];
    int other = 3 - corner - side;
    const auto& b = c.corners[other];
    double dx = b[0] - a[0], dy = b[1] - a[1];
    double l = std::hypot(dx, dy);
    return std::array<double, 2>{dx / l, dy / l};
  };
  auto dp = dir_along(pc, cp, sp);
  auto df = dir_along(fc, cf, sf);
  double cosr = df[0] * dp[0] + df[1] * dp[1];
  double sinr = df[0] * dp[1] - df[1] * dp[0];
  Similarity sim;
  sim.s = s;
  sim.r00 = cosr;
  sim.r01 = -sinr;
  sim.r10 = sinr;
  sim.r11 = cosr;
  sim.af = fc.corners[cf];
  sim.ap = pc.corners[cp];
  // the image must land on the interior side of p's anchoring side
  auto probe = sim.apply(fc.corners[3 - cf - sf]);
  const ELine2& line_sp = pc.lines[sp];
  double v = line_sp.nx * probe[0] + line_sp.ny * probe[1] - line_sp.c;
  if (v > 0) {
    double m00 = dp[0] * dp[0] - dp[1] * dp[1], m01 = 2 * dp[0] * dp[1];
    double m10 = m01, m11 = dp[1] * dp[1] - dp[0] * dp[0];
    double a = m00 * sim.r00 + m01 * sim.r10, b = m00 * sim.r01 + m01 * sim.r11;
    double c2 = m10 * sim.r00 + m11 * sim.r10, d = m10 * sim.r01 + m11 * sim.r11;
    sim.r00 = a;
    sim.r01 = b;
    sim.r10 = c2;
    sim.r11 = d;
  }
  return sim;
}

// lift a chart line back to a plane normal: e = nx u1 + ny u2 + c L
Vec4 lift_line(const UpperHalfSpace& h, const ELine2& l) {
  Vec4 e{};
  for (int i = 0; i < 4; ++i) e[i] = l.nx * h.u1[i] + l.ny * h.u2[i] + l.c * h.L[i];
  return e;
}

// complete three cusp planes to a tile congruent to F: the fourth face must
// reproduce F's Gram row against the cusp faces, have unit normal, and cut
// the cusp from below
std::optional<Vec4> solve_fourth_normal(const std::array<Vec4, 3>& n,
                                        const std::array<double, 3>& gram_row,
                                        const UpperHalfSpace& h) {
  Mat4 rows{};
  for (int i = 0; i < 3; ++i) rows[i] = {n[i][0], n[i][1], n[i][2], -n[i][3]};
  rows[3] = {h.Lp[0], h.Lp[1], h.Lp[2], -h.Lp[3]};
  Mat4 inv;
  try {
    inv = mat_inverse(rows);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  Vec4 rhs = {gram_row[0], gram_row[1], gram_row[2], 0.0};
  Vec4 w{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w[i] += inv[i][j] * rhs[j];
  double wl = minkowski(w, h.L);
  if (std::fabs(wl) < 1e-10) return std::nullopt;
  double t = (1.0 - minkowski(w, w)) / (2.0 * wl);
  Vec4 n4 = add4(w, scale4(h.L, t));
  if (minkowski(n4, h.L) > 0) return std::nullopt;
  return n4;
}

std::vector<Tile> cusp_seeds(const TetRealization& frel, const TetRealization& prel, int wp,
                             long long cap) {
  std::vector<Tile> seeds;
  CuspChart pc = cusp_chart(prel, wp);
  Mat4 fgram{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) fgram[i][j] = minkowski(frel.normals[i], frel.normals[j]);
  auto corner_angle = [](const CuspChart& c, int corner) {
    const ELine2& a = c.lines[(corner + 1) % 3];
    const ELine2& b = c.lines[(corner + 2) % 3];
    double cc = -(a.nx * b.nx + a.ny * b.ny);
    return std::acos(std::max(-1.0, std::min(1.0, cc)));
  };
  for (int wf = 0; wf < 4; ++wf) {
    if (frel.vtype[wf] != VertexType::Ideal) continue;
    CuspChart fc = cusp_chart(frel, wf);
    const int cp = 0;
    double pang = corner_angle(pc, cp);
    for (long long nw = 1; nw <= cap; ++nw) {
      double s = std::sqrt(pc.area / (static_cast<double>(nw) * fc.area));
      for (int cf = 0; cf < 3; ++cf) {
        if (corner_angle(fc, cf) > pang + 1e-9) continue;
        for (int sf = 0; sf < 3; ++sf) {
          if (sf == cf) continue;  // must be a side through corner cf
          const int sp = (cp + 1) % 3;
          Similarity sim = corner_similarity(pc, cp, sp, fc, cf, sf, s);
          std::array<Vec4, 3> lifted;
          std::array<double, 3> gram_row;
          for (int i = 0; i < 3; ++i) {
            lifted[i] = lift_line(pc.h, sim.apply_line(fc.lines[i]));
            gram_row[i] = fgram[wf][fc.faces[i]];
          }
          auto n4 = solve_fourth_normal(lifted, gram_row, pc.h);
          if (!n4) continue;
          seeds.push_back(make_tile({lifted[0], lifted[1], lifted[2], *n4}));
        }
      }
    }
  }
  return seeds;
}

}  // namespace

TessellationResult verify_tessellation(const CatalogEntry& F, const CatalogEntry& P,
                                       int max_tiles) {
  TessellationResult res;
  auto ratio = ratio_integrality(F.volume, P.volume);
  if (!ratio || *ratio < 1) {
    res.failure = "volume ratio is not a positive integer";
    return res;
  }
  res.expected_tiles = *ratio;
  if (*ratio > max_tiles) {
    res.failure = "volume ratio exceeds the tile cap";
    return res;
  }
  TetRealization prel = realize(P.diagram);
  TetRealization frel = realize(F.diagram);

  std::vector<Tile> seeds;
  int wp_finite = -1, wp_ideal = -1;
  for (int v = 0; v < 4; ++v) {
    if (prel.vtype[v] == VertexType::Finite && wp_finite < 0) wp_finite = v;
    if (prel.vtype[v] == VertexType::Ideal && wp_ideal < 0) wp_ideal = v;
  }
  if (wp_finite >= 0) {
    // some corner tile shares a full flag with any fixed finite corner of P
    int a = -1, b = -1;
    for (int i = 0; i < 4 && b < 0; ++i) {
      if (i == wp_finite) continue;
      if (a < 0)
        a = i;
      else
        b = i;
    }
    Mat4 pframe = corner_frame(prel, wp_finite, a, b);
    for (int wf = 0; wf < 4; ++wf) {
      if (frel.vtype[wf] != VertexType::Finite) continue;
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
          if (x == y || x == wf || y == wf) continue;
          Mat4 g = frame_map(corner_frame(frel, wf, x, y), pframe);
          seeds.push_back(transform_tile(g, make_tile(frel.normals)));
        }
    }
    if (seeds.empty()) {
      res.failure = "container has a finite corner but the tile has no finite vertex";
      return res;
    }
  } else {
    seeds = cusp_seeds(frel, prel, wp_ideal, std::min<long long>(*ratio, max_tiles));
    if (seeds.empty()) {
      res.failure = "no cusp seating: the tile has no compatible ideal vertex";
      return res;
    }
  }

  std::vector<std::vector<Tile>> successes;
  for (const auto& seed : seeds) {
    Expansion ex = expand_in_container(prel, seed, *ratio);
    res.best_tiles = std::max(res.best_tiles, ex.placed);
    if (!ex.ok) {
      if (res.failure.empty()) res.failure = ex.failure;
      continue;
    }
    if (static_cast<long long>(ex.tiles.size()) != *ratio) {
      res.failure = "expansion closed with the wrong tile count";
      continue;
    }
    bool dup = false;
    for (const auto& s : successes)
      if (tiles_equal(s, ex.tiles, 1e-6)) dup = true;
    if (!dup) successes.push_back(std::move(ex.tiles));
  }
  if (successes.empty()) {
    if (res.failure.empty()) res.failure = "no seating yields a partition";
    return res;
  }
  res.success = true;
  res.tiles = static_cast<int>(successes.front().size());
  res.tiling = TilingRealization{prel, successes.front()};
  res.cert = certify_tiling(res.tiling);
  res.norm = normalize_tiling(res.tiling, P.diagram);
  if (!res.cert.ok) {
    res.success = false;
    res.failure = "certification failed: " + res.cert.detail;
  }
  return res;
}

namespace {

bool sorted_equal(std::array<AngleFrac, 3> a, std::array<AngleFrac, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

int fig2a_tail(const TetShape& t) {
  for (int x = 0; x < 4; ++x) {
    int others[3], r = 0;
    for (int i = 0; i < 4; ++i)
      if (i != x) others[r++] = i;
    bool triangle = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!(t.angle(others[i], others[j]) == AngleFrac(1, 3))) triangle = false;
    if (!triangle) continue;
    int attached = 0, k = 0;
    for (int i = 0; i < 3; ++i) {
      const AngleFrac& a = t.angle(x, others[i]);
      if (!a.is_right()) {
        ++attached;
        if (a.num != 1) return 0;
        k = static_cast<int>(a.den);
      }
    }
    if (attached == 1) return k;
  }
  return 0;
}

// non-trivial second-type link decompositions of `outer` by tiles of shape
// `fund`, with tile counts bounded by the volume ratio
std::vector<int> link_route_counts(const std::array<AngleFrac, 3>& fund,
                                   const std::array<AngleFrac, 3>& outer, long long ratio) {
  Geometry2D g = triangle_geometry(fund);
  if (triangle_geometry(outer) != g) return {};
  if (g == Geometry2D::Hyperbolic) return {};
  int cap = static_cast<int>(std::min<long long>(ratio, 60));
  auto list = search_triangle_decompositions(g, fund, cap, true);
  std::array<double, 3> want = {outer[0].value(), outer[1].value(), outer[2].value()};
  std::sort(want.rbegin(), want.rend());
  std::vector<int> ns;
  for (const auto& td : list) {
    bool same = true;
    for (int i = 0; i < 3; ++i)
      if (std::fabs(td.outer[i] - want[i]) > 1e-8) same = false;
    if (same) ns.push_back(td.tiles);
  }
  return ns;
}

}  // namespace

std::vector<CandidatePair> filter_pipeline(const std::vector<CatalogEntry>& cat) {
  std::vector<CandidatePair> out;
  for (const auto& F : cat)
    for (const auto& P : cat) {
      if (F.index == P.index || F.compact != P.compact) continue;
      auto n = ratio_integrality(F.volume, P.volume);
      if (!n || *n < 2) continue;
      CandidatePair cp;
      cp.f_index = F.index;
      cp.p_index = P.index;
      cp.ratio = *n;
      cp.filters.push_back({"volume", true, "Vol(P)/Vol(F) = " + std::to_string(*n)});

      auto eliminate = [&](const std::string& name, const std::string& reason) {
        cp.filters.push_back({name, false, reason});
        cp.survives = false;
      };

      // Subdiagram property: every node of Sigma(P) matches or decomposes
      auto subs_p = subdiagram_triangles(P.diagram);
      auto subs_f = subdiagram_triangles(F.diagram);
      for (int v = 0; v < 4 && cp.survives; ++v) {
        bool okv = false;
        for (int w = 0; w < 4 && !okv; ++w) {
          if (sorted_equal(subs_p[v].angles, subs_f[w].angles))
            okv = true;
          else if (subs_p[v].geometry == subs_f[w].geometry &&
                   subs_p[v].geometry != Geometry2D::Hyperbolic &&
                   triangle_decomposition_exists(
                       subs_f[w].angles, subs_p[v].angles,
                       static_cast<int>(std::min<long long>(cp.ratio, 64))))
            okv = true;
        }
        if (!okv)
          eliminate("subdiagram",
                    "the subdiagram of Sigma(P) omitting node " + std::to_string(v) +
                        " is neither equal to nor decomposable by a subdiagram of Sigma(F)");
      }

      // N = 2 always leaves a non-fundamental angle across the interface
      if (cp.survives && cp.ratio == 2)
        eliminate("two-tiles", "any decomposition with N=2 has a non-fundamental angle");

      if (cp.survives) {
        // a non-fundamental vertex needs a non-trivial second-type link
        // decomposition; spherical ones only exist with 15 tiles
        std::vector<std::pair<int, int>> routes;
        for (int v = 0; v < 4; ++v)
          for (int w = 0; w < 4; ++w) {
            if (subs_p[v].geometry != subs_f[w].geometry) continue;
            if (subs_p[v].geometry == Geometry2D::Hyperbolic) continue;
            for (int nlink : link_route_counts(subs_f[w].angles, subs_p[v].angles, cp.ratio))
              routes.push_back({v, nlink});
          }
        if (routes.empty() && cp.ratio < 8) {
          eliminate("vertex-count",
                    "all vertices would be fundamental, forcing N >= 2^3 = 8 > " +
                        std::to_string(cp.ratio) +
                        "; no vertex link admits a non-trivial second-type decomposition");
        } else if (!P.compact && routes.empty()) {
          eliminate("vertex-links",
                    "P must have a non-fundamental vertex (each tile has an ideal vertex, so "
                    "all-fundamental vertices would force N <= 4 < 2^3), but no vertex link of "
                    "P admits a non-trivial second-type decomposition by a link of F");
        } else if (!P.compact) {
          int k = fig2a_tail(F.diagram);
          if (k > 3) {
            bool p_has = false;
            for (const auto& a : P.diagram.a)
              if (a == AngleFrac(1, k)) p_has = true;
            if (!p_has) {
              int nmin = 1 << 30;
              for (auto& rt : routes) nmin = std::min(nmin, rt.second);
              long long bound = static_cast<long long>(nmin) * k;
              if (cp.ratio < bound)
                eliminate("edge-multiplication",
                          "P has no dihedral angle pi/" + std::to_string(k) +
                              ", so each of the n tiles at a cusp owns its own pi/" +
                              std::to_string(k) + " edge shared by k tiles: N >= n*k = " +
                              std::to_string(bound) + " > " + std::to_string(cp.ratio));
            }
          }
          if (cp.survives) {
            bool only_442_9 = !routes.empty();
            std::array<AngleFrac, 3> l442 = {AngleFrac(1, 2), AngleFrac(1, 4), AngleFrac(1, 4)};
            for (auto& rt : routes)
              if (rt.second != 9 || !sorted_equal(subs_p[rt.first].angles, l442))
                only_442_9 = false;
            if (only_442_9 && cp.ratio < 14)
              eliminate("three-planes",
                        "the nine tiles at the (4,4,2) cusp have opposite faces in three "
                        "planes, each holding at most four, so N >= 9 + 5 = 14 > " +
                            std::to_string(cp.ratio));
          }
        }
      }
      out.push_back(std::move(cp));
    }
  return out;
}

SecondTypeReport run_second_type_pipeline(const std::vector<CatalogEntry>& cat,
                                          bool bounded_only, int max_tiles) {
  SecondTypeReport rep;
  rep.pairs = filter_pipeline(cat);
  for (const auto& cp : rep.pairs) {
    const CatalogEntry& F = cat[cp.f_index - 1];
    const CatalogEntry& P = cat[cp.p_index - 1];
    if (bounded_only && !F.compact) continue;
    SecondTypeEntry e;
    e.f_index = cp.f_index;
    e.p_index = cp.p_index;
    e.tiles = cp.ratio;
    e.tess = verify_tessellation(F, P, max_tiles);
    if (!e.tess.success) continue;
    rep.tessellations.push_back(e);
    if (all_angles_fundamental(e.tess.tiling)) rep.second_type.push_back(std::move(e));
  }
  return rep;
}

SecondTypeReport second_type_classification(const std::vector<CatalogEntry>& cat) {
  SecondTypeReport rep = run_second_type_pipeline(cat);
  if (rep.second_type.size() != 2)
    throw std::logic_error(
        "second_type_classification: expected exactly two decompositions, got " +
        std::to_string(rep.second_type.size()));
  PaperActors pa = identify_paper_actors(cat);
  for (const auto& e : rep.second_type)
    if (e.f_index != pa.h12)
      throw std::logic_error("second_type_classification: fundamental is not H_12");
  std::set<int> containers;
  for (const auto& e : rep.second_type) containers.insert(e.p_index);
  if (containers != std::set<int>{pa.h24, pa.h32})
    throw std::logic_error("second_type_classification: containers are not {H_24, H_32}");
  return rep;
}

std::vector<double> three_planes_dihedrals(const CatalogEntry& F, const CatalogEntry& P) {
  TetRealization prel = realize(P.diagram);
  TetRealization frel = realize(F.diagram);
  int wp = -1;
  for (int v = 0; v < 4; ++v)
    if (prel.vtype[v] == VertexType::Ideal && wp < 0) wp = v;
  if (wp < 0) throw std::domain_error("three_planes_dihedrals: container has no cusp");

  auto seeds = cusp_seeds(frel, prel, wp, 9);
  const Vec4& L = prel.vertices[wp];
  for (const auto& seed : seeds) {
    // expand across the vertical facets only: this rebuilds the induced link
    // decomposition without leaving the cusp
    std::set<std::string> seen{tile_id(seed)};
    std::vector<Tile> queue{seed}, acc;
    bool bad = false;
    while (!queue.empty() && !bad) {
      Tile t = queue.back();
      queue.pop_back();
      acc.push_back(t);
      if (acc.size() > 9) bad = true;
      for (int f = 0; f < 4 && !bad; ++f) {
        const Vec4& n = t.normals[f];
        if (std::fabs(minkowski(n, L)) > 1e-7) continue;  // not through the cusp
        bool boundary = false;
        for (int k = 0; k < 4 && !boundary; ++k) {
          bool close = true;
          for (int c = 0; c < 4 && close; ++c)
            if (std::fabs(n[c] - prel.normals[k][c]) > 1e-6) close = false;
          boundary = close;
        }
        if (boundary) continue;
        Tile refl = reflect_tile(t, n);
        if (seen.insert(tile_id(refl)).second) queue.push_back(refl);
      }
    }
    if (bad || acc.size() != 9) continue;
    std::vector<Vec4> planes;
    for (const auto& t : acc)
      for (const auto& n : t.normals) {
        if (std::fabs(minkowski(n, L)) < 1e-7) continue;
        bool seen_plane = false;
        for (const auto& p : planes) {
          bool close = true, closef = true;
          for (int c = 0; c < 4; ++c) {
            if (std::fabs(n[c] - p[c]) > 1e-6) close = false;
            if (std::fabs(n[c] + p[c]) > 1e-6) closef = false;
          }
          if (close || closef) seen_plane = true;
        }
        if (!seen_plane) planes.push_back(n);
      }
    if (planes.size() < 2) continue;
    std::vector<double> dihedrals;
    for (std::size_t i = 0; i < planes.size(); ++i)
      for (std::size_t j = i + 1; j < planes.size(); ++j) {
        double c = -minkowski(planes[i], planes[j]);
        if (std::fabs(c) >= 1.0) continue;  // the planes do not intersect
        dihedrals.push_back(std::acos(std::max(-1.0, std::min(1.0, c))));
      }
    if (!dihedrals.empty()) return dihedrals;
  }
  throw std::runtime_error("three_planes_dihedrals: no nine-tile cusp configuration found");
}

}  // namespace coxtet
