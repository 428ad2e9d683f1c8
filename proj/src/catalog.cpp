#include "coxtet/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace coxtet {

std::array<SubdiagramTriangle, 4> subdiagram_triangles(const TetShape& t) {
  std::array<SubdiagramTriangle, 4> out;
  for (int v = 0; v < 4; ++v) {
    SubdiagramTriangle s;
    s.omitted_node = v;
    int rows[3], r = 0;
    for (int i = 0; i < 4; ++i)
      if (i != v) rows[r++] = i;
    s.angles = {t.angle(rows[0], rows[1]), t.angle(rows[0], rows[2]),
                t.angle(rows[1], rows[2])};
    Signature sig = signature(vertex_link_gram(t, v), kSignatureTol);
    if (sig.pos == 3)
      s.geometry = Geometry2D::Spherical;
    else if (sig.pos == 2 && sig.zero == 1)
      s.geometry = Geometry2D::Euclidean;
    else
      s.geometry = Geometry2D::Hyperbolic;
    out[v] = s;
  }
  return out;
}

namespace {

bool has_333_subdiagram(const TetShape& t) {
  for (const auto& s : subdiagram_triangles(t)) {
    bool all3 = true;
    for (const auto& a : s.angles)
      if (!(a == AngleFrac(1, 3))) all3 = false;
    if (all3) return true;
  }
  return false;
}

// quick necessary condition: every vertex link must be spherical or
// Euclidean, i.e. sum of link angles >= pi
bool links_feasible(const std::array<int, 6>& m) {
  static const int pairs[4][3] = {{3, 4, 5}, {1, 2, 5}, {0, 2, 4}, {0, 1, 3}};
  for (int v = 0; v < 4; ++v) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += 1.0 / m[pairs[v][k]];
    if (s < 1.0 - 1e-12) return false;
  }
  return true;
}

}  // namespace

std::vector<CatalogEntry> enumerate_coxeter_tetrahedra(int max_label) {
  if (max_label < 6) throw std::invalid_argument("enumerate_coxeter_tetrahedra: max_label >= 6");
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;

  std::array<int, 6> m;
  for (m[0] = 2; m[0] <= max_label; ++m[0])
    for (m[1] = 2; m[1] <= max_label; ++m[1])
      for (m[2] = 2; m[2] <= max_label; ++m[2])
        for (m[3] = 2; m[3] <= max_label; ++m[3])
          for (m[4] = 2; m[4] <= max_label; ++m[4])
            for (m[5] = 2; m[5] <= max_label; ++m[5]) {
              if (!links_feasible(m)) continue;
              TetShape t;
              for (int k = 0; k < 6; ++k) t.a[k] = AngleFrac(1, m[k]);
              CanonicalForm cf = canonical_form(t);
              if (seen.count(cf.key)) continue;
              if (!is_hyperbolic(cf.shape)) continue;
              seen.insert(cf.key);
              CatalogEntry e;
              e.diagram = cf.shape;
              e.canonical_key = cf.key;
              e.compact = ideal_vertex_count(cf.shape) == 0;
              e.volume = tet_volume(cf.shape);
              e.fig2_family = has_333_subdiagram(cf.shape);
              out.push_back(std::move(e));
            }

  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.compact != b.compact) return a.compact;
    long long qa = std::llround(a.volume.value * 1e7);
    long long qb = std::llround(b.volume.value * 1e7);
    if (qa != qb) return qa < qb;
    return a.canonical_key < b.canonical_key;
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].index = static_cast<int>(i) + 1;
    out[i].id = "H_" + std::to_string(i + 1);
  }
  return out;
}

const CatalogEntry* find_by_key(const std::vector<CatalogEntry>& cat, const std::string& key) {
  for (const auto& e : cat)
    if (e.canonical_key == key) return &e;
  return nullptr;
}

namespace {

// triangle(3,3,3) with a tail of angle pi/k: returns k or 0
int tail_of_fig2a(const TetShape& t) {
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
        k = static_cast<int>(a.den);
        if (a.num != 1) return 0;
      }
    }
    if (attached == 1) return k;
  }
  return 0;
}

bool is_all_pi3(const TetShape& t) {
  for (const auto& a : t.a)
    if (!(a == AngleFrac(1, 3))) return false;
  return true;
}

bool is_all_pi3_minus_edge(const TetShape& t) {
  int thirds = 0, rights = 0;
  for (const auto& a : t.a) {
    if (a == AngleFrac(1, 3)) ++thirds;
    if (a.is_right()) ++rights;
  }
  return thirds == 5 && rights == 1;
}

bool has_euclidean_link(const TetShape& t, const std::array<AngleFrac, 3>& want) {
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  for (const auto& s : subdiagram_triangles(t)) {
    if (s.geometry != Geometry2D::Euclidean) continue;
    auto a = s.angles;
    std::sort(a.begin(), a.end());
    if (a == sorted_want) return true;
  }
  return false;
}

}  // namespace

PaperActors identify_paper_actors(const std::vector<CatalogEntry>& cat) {
  PaperActors pa;

  // compact of minimal volume, and the unique compact integer-ratio pair
  for (const auto& e : cat)
    if (e.compact && (pa.h1 < 0 || e.volume.value < cat[pa.h1 - 1].volume.value))
      pa.h1 = e.index;
  int pair_count = 0;
  for (const auto& f : cat)
    for (const auto& p : cat) {
      if (!f.compact || !p.compact || f.index == p.index) continue;
      auto n = ratio_integrality(f.volume, p.volume);
      if (n && *n >= 2) {
        ++pair_count;
        pa.h3 = p.index;
        if (f.index != pa.h1)
          throw std::logic_error("paper actors: compact ratio pair does not start at H_1");
      }
    }
  if (pair_count != 1) throw std::logic_error("paper actors: compact volume pair not unique");

  for (const auto& e : cat) {
    if (is_all_pi3(e.diagram)) pa.h32 = e.index;
    if (is_all_pi3_minus_edge(e.diagram)) pa.h24 = e.index;
    int k = tail_of_fig2a(e.diagram);
    if (k == 3) pa.h12 = e.index;
    if (k == 4) pa.h17 = e.index;
    if (k == 5) pa.h22 = e.index;
    if (k == 6) pa.h26 = e.index;
  }
  if (pa.h32 < 0) throw std::logic_error("paper actors: all-pi/3 tetrahedron missing");

  // [3,3,6]: the unbounded tetrahedron with volume ratio 24 to the all-pi/3
  // one and a unique ideal vertex
  for (const auto& e : cat) {
    if (e.compact) continue;
    auto n = ratio_integrality(e.volume, cat[pa.h32 - 1].volume);
    if (n && *n == 24 && ideal_vertex_count(e.diagram) == 1) pa.h10 = e.index;
  }

  // the unique unbounded pair with (4,4,2) Euclidean links on both sides
  // and an integer ratio >= 9 (the induced link decomposition needs at
  // least nine tiles)
  std::array<AngleFrac, 3> link442 = {AngleFrac(1, 4), AngleFrac(1, 4), AngleFrac(1, 2)};
  int c442 = 0;
  for (const auto& f : cat)
    for (const auto& p : cat) {
      if (f.compact || p.compact || f.index == p.index) continue;
      if (!has_euclidean_link(f.diagram, link442) || !has_euclidean_link(p.diagram, link442))
        continue;
      auto n = ratio_integrality(f.volume, p.volume);
      if (n && *n >= 9) {
        ++c442;
        pa.h11 = f.index;
        pa.h31 = p.index;
      }
    }
  if (c442 != 1) throw std::logic_error("paper actors: (4,4,2)-link pair not unique");

  for (int v : {pa.h1, pa.h3, pa.h10, pa.h11, pa.h12, pa.h17, pa.h22, pa.h26, pa.h24, pa.h31,
                pa.h32})
    if (v < 0) throw std::logic_error("paper actors: identification incomplete");
  return pa;
}

}  // namespace coxtet
