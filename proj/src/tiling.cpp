#include "coxtet/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coxtet/volume.hpp"

namespace coxtet {

std::int64_t quant(double x) { return std::llround(x * 1e6); }

namespace {

std::array<std::int64_t, 4> quant4(const Vec4& v) {
  return {quant(v[0]), quant(v[1]), quant(v[2]), quant(v[3])};
}

bool vec_close(const Vec4& a, const Vec4& b, double tol) {
  for (int i = 0; i < 4; ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

Tile make_tile(std::array<Vec4, 4> normals) {
  // keep normals exactly unit spacelike: reflection chains otherwise amplify
  // rounding drift geometrically
  for (auto& n : normals) {
    double q = minkowski(n, n);
    if (std::fabs(q - 1.0) < 1e-6) n = scale4(n, 1.0 / std::sqrt(q));
  }
  std::sort(normals.begin(), normals.end(),
            [](const Vec4& a, const Vec4& b) { return quant4(a) < quant4(b); });
  return Tile{normals};
}

Tile transform_tile(const Mat4& g, const Tile& t) {
  std::array<Vec4, 4> n;
  for (int i = 0; i < 4; ++i) n[i] = mat_apply(g, t.normals[i]);
  return make_tile(n);
}

Tile reflect_tile(const Tile& t, const Vec4& plane) {
  std::array<Vec4, 4> n;
  for (int i = 0; i < 4; ++i) n[i] = reflect(t.normals[i], plane);
  return make_tile(n);
}

bool tile_close(const Tile& a, const Tile& b, double tol) {
  // canonical intra-tile order may differ near grid edges; match greedily
  bool used[4] = {};
  for (int i = 0; i < 4; ++i) {
    bool found = false;
    for (int j = 0; j < 4 && !found; ++j) {
      if (used[j]) continue;
      if (vec_close(a.normals[i], b.normals[j], tol)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

TetRealization tile_realization(const Tile& t, double tol) {
  return realization_from_normals(t.normals, tol);
}

std::array<double, 6> tile_angles(const Tile& t) {
  std::array<double, 6> a{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double c = -minkowski(t.normals[i], t.normals[j]);
      if (c > 1.0) c = 1.0;
      if (c < -1.0) c = -1.0;
      a[TetShape::pair_index(i, j)] = std::acos(c);
    }
  return a;
}

double tile_volume(const Tile& t) { return tet_volume_general(tile_angles(t)); }

Vec4 tile_center(const Tile& t) {
  TetRealization r = tile_realization(t);
  Vec4 x{};
  for (int i = 0; i < 4; ++i) x = add4(x, r.vertices[i]);
  double q = minkowski(x, x);
  x = scale4(x, 1.0 / std::sqrt(-q));
  if (x[3] < 0) x = scale4(x, -1.0);
  return x;
}

TilingRealization transform_tiling(const Mat4& g, const TilingRealization& t) {
  TilingRealization out;
  for (int i = 0; i < 4; ++i) {
    out.container.normals[i] = mat_apply(g, t.container.normals[i]);
    out.container.vertices[i] = mat_apply(g, t.container.vertices[i]);
    out.container.vtype[i] = t.container.vtype[i];
  }
  out.tiles.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) out.tiles.push_back(transform_tile(g, tile));
  return out;
}

bool tiles_equal(const std::vector<Tile>& a, const std::vector<Tile>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& ta : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j]) continue;
      if (tile_close(ta, b[j], tol)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string serialize_tiles(const std::vector<Tile>& tiles) {
  std::vector<std::string> parts;
  parts.reserve(tiles.size());
  for (const auto& t : tiles) {
    std::string s;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        s += std::to_string(quant(t.normals[i][k]));
        s += ',';
      }
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& p : parts) {
    out += p;
    out += ';';
  }
  return out;
}

Mat4 normal_match_isometry(const TetRealization& src, const TetRealization& dst,
                           const Perm4& perm) {
  Mat4 s{}, d{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      s[k][i] = src.normals[i][k];
      d[k][i] = dst.normals[perm[i]][k];
    }
  Mat4 g = mat_mul(d, mat_inverse(s));
  if (!is_minkowski_isometry(g, 1e-7))
    throw std::runtime_error("normal_match_isometry: correspondence is not an isometry");
  return g;
}

NormalizedTiling normalize_tiling(const TilingRealization& t, const TetShape& shape) {
  NormalizedTiling out;
  CanonicalForm cf = canonical_form(shape);
  out.canonical_shape = cf.shape;
  TetRealization std_real = realize(cf.shape);
  bool first = true;
  for (const auto& p : canonicalizing_perms(shape)) {
    Mat4 g = normal_match_isometry(t.container, std_real, p);
    std::vector<Tile> tiles;
    tiles.reserve(t.tiles.size());
    for (const auto& tile : t.tiles) tiles.push_back(transform_tile(g, tile));
    std::string s = serialize_tiles(tiles);
    if (first || s < out.key) out.key = s;
    out.variants.push_back(std::move(tiles));
    first = false;
  }
  return out;
}

bool same_decomposition(const NormalizedTiling& a, const NormalizedTiling& b, double tol) {
  if (!(a.canonical_shape == b.canonical_shape)) return false;
  for (const auto& va : a.variants)
    if (tiles_equal(va, b.variants.front(), tol)) return true;
  return false;
}

std::vector<Vec4> interior_planes(const TilingRealization& t, double tol) {
  std::vector<Vec4> planes;
  auto is_container_face = [&](const Vec4& n) {
    for (int i = 0; i < 4; ++i) {
      if (vec_close(n, t.container.normals[i], tol)) return true;
      if (vec_close(scale4(n, -1.0), t.container.normals[i], tol)) return true;
    }
    return false;
  };
  for (const auto& tile : t.tiles)
    for (const auto& n : tile.normals) {
      if (is_container_face(n)) continue;
      Vec4 canon = n;
      for (int k = 0; k < 4; ++k) {
        if (std::fabs(canon[k]) > 1e-8) {
          if (canon[k] < 0) canon = scale4(canon, -1.0);
          break;
        }
      }
      bool seen = false;
      for (const auto& p : planes)
        if (vec_close(p, canon, tol)) {
          seen = true;
          break;
        }
      if (!seen) planes.push_back(canon);
    }
  return planes;
}

FaceTrace extract_face_trace(const TilingRealization& t, int face, double tol) {
  FaceTrace tr;
  tr.face = face;
  const Vec4& n = t.container.normals[face];

  int corner_ix = 0;
  for (int v = 0; v < 4; ++v) {
    if (v == face) continue;
    int others[2], k = 0;
    for (int x = 0; x < 4; ++x)
      if (x != face && x != v) others[k++] = x;
    Vec4 m0 = face_side_normal(t.container, face, others[0]);
    Vec4 m1 = face_side_normal(t.container, face, others[1]);
    double c = -minkowski(m0, m1);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    tr.outer_angles[corner_ix++] = std::acos(c);
  }

  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const Tile& tile = t.tiles[ti];
    int facet = -1;
    for (int i = 0; i < 4; ++i)
      if (vec_close(tile.normals[i], n, tol)) facet = i;
    if (facet < 0) continue;
    TraceTile tt;
    tt.tile_index = static_cast<int>(ti);
    tt.f_face = facet;
    TetRealization tr3 = tile_realization(tile);
    int c = 0;
    int corner_faces[3];
    for (int v = 0; v < 4; ++v)
      if (v != facet) {
        tt.corners[c] = tr3.vertices[v];
        corner_faces[c] = v;
        ++c;
      }
    for (int i = 0; i < 3; ++i) {
      int a = corner_faces[(i + 1) % 3], b = corner_faces[(i + 2) % 3];
      Vec4 ma = sub4(tr3.normals[a], scale4(n, minkowski(tr3.normals[a], n)));
      Vec4 mb = sub4(tr3.normals[b], scale4(n, minkowski(tr3.normals[b], n)));
      double qa = std::sqrt(minkowski(ma, ma)), qb = std::sqrt(minkowski(mb, mb));
      double cc = -minkowski(ma, mb) / (qa * qb);
      if (cc > 1.0) cc = 1.0;
      if (cc < -1.0) cc = -1.0;
      tt.angles[i] = std::acos(cc);
    }
    tr.tiles2d.push_back(tt);
  }

  int side_ix = 0;
  for (int a = 0; a < 4; ++a) {
    if (a == face) continue;
    Vec4 m = face_side_normal(t.container, face, a);
    Vec4 c = face_incenter(t.container, face);
    Vec4 foot = sub4(c, scale4(m, minkowski(c, m)));
    double qf = -minkowski(foot, foot);
    foot = scale4(foot, 1.0 / std::sqrt(qf));
    if (foot[3] < 0) foot = scale4(foot, -1.0);
    Vec4 u = minkowski_orthogonal(n, m, foot);
    u = scale4(u, 1.0 / std::sqrt(minkowski(u, u)));
    int ends[2], ek = 0;
    for (int x = 0; x < 4; ++x)
      if (x != face && x != a) ends[ek++] = x;
    if (minkowski(t.container.vertices[std::max(ends[0], ends[1])], u) < 0)
      u = scale4(u, -1.0);
    std::vector<double> coords;
    for (const auto& tt : tr.tiles2d)
      for (const auto& corner : tt.corners) {
        if (std::fabs(minkowski(corner, m)) > tol) continue;
        double q = minkowski(corner, corner);
        if (q > -tol) continue;  // ideal endpoint
        Vec4 cn = scale4(corner, 1.0 / std::sqrt(-q));
        bool is_end = false;
        for (int e = 0; e < 2; ++e)
          if (vec_close(cn, t.container.vertices[ends[e]], 1e-6)) is_end = true;
        if (is_end) continue;
        double s = std::asinh(minkowski(cn, u));
        bool seen = false;
        for (double other : coords)
          if (std::fabs(other - s) < 1e-7) seen = true;
        if (!seen) coords.push_back(s);
      }
    std::sort(coords.begin(), coords.end());
    tr.side_patterns[side_ix++] = std::move(coords);
  }
  return tr;
}

}  // namespace coxtet
