#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "coxtet/catalog.hpp"

using namespace coxtet;

namespace {
const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = enumerate_coxeter_tetrahedra(10);
  return cat;
}
}  // namespace

TEST_CASE("exactly 32 hyperbolic Coxeter tetrahedra: 9 compact, 23 not") {
  const auto& cat = catalog();
  CHECK(cat.size() == 32);
  int compact = 0;
  for (const auto& e : cat)
    if (e.compact) ++compact;
  CHECK(compact == 9);
  // compact block comes first
  for (int i = 0; i < 9; ++i) CHECK(cat[i].compact);
  for (int i = 9; i < 32; ++i) CHECK(!cat[i].compact);
  // volumes ascend within each block
  for (int i = 1; i < 9; ++i) CHECK(cat[i - 1].volume.value <= cat[i].volume.value + 1e-12);
  for (int i = 10; i < 32; ++i) CHECK(cat[i - 1].volume.value <= cat[i].volume.value + 1e-12);
}

TEST_CASE("raising the label bound from 6 to 10 adds nothing") {
  auto cat6 = enumerate_coxeter_tetrahedra(6);
  const auto& cat10 = catalog();
  REQUIRE(cat6.size() == cat10.size());
  for (std::size_t i = 0; i < cat6.size(); ++i)
    CHECK(cat6[i].canonical_key == cat10[i].canonical_key);
}

TEST_CASE("known members of the catalog") {
  const auto& cat = catalog();
  TetShape pi3;
  for (auto& a : pi3.a) a = AngleFrac(1, 3);
  const CatalogEntry* p = find_by_key(cat, canonical_form(pi3).key);
  REQUIRE(p != nullptr);
  CHECK(!p->compact);

  const CatalogEntry* h336 = find_by_key(cat, canonical_form(linear_diagram(3, 3, 6)).key);
  REQUIRE(h336 != nullptr);
  CHECK(!h336->compact);
  CHECK(ideal_vertex_count(h336->diagram) == 1);

  CHECK(find_by_key(cat, canonical_form(linear_diagram(5, 3, 4)).key) != nullptr);
  CHECK(find_by_key(cat, canonical_form(linear_diagram(3, 5, 3)).key) != nullptr);
}

TEST_CASE("subdiagram triangles") {
  TetShape pi3;
  for (auto& a : pi3.a) a = AngleFrac(1, 3);
  auto subs = subdiagram_triangles(pi3);
  for (const auto& s : subs) {
    CHECK(s.geometry == Geometry2D::Euclidean);
    for (const auto& a : s.angles) CHECK(a == AngleFrac(1, 3));
  }

  auto s336 = subdiagram_triangles(linear_diagram(3, 3, 6));
  // omit node 0: labels (3, 2, 6); omit node 3: labels (3, 2, 3)
  bool has_362 = false, has_332 = false;
  for (const auto& s : s336) {
    std::multiset<std::string> labels;
    for (const auto& a : s.angles) labels.insert(a.str());
    if (labels == std::multiset<std::string>{"1/3", "1/6", "1/2"}) has_362 = true;
    if (labels == std::multiset<std::string>{"1/3", "1/3", "1/2"}) has_332 = true;
  }
  CHECK(has_362);
  CHECK(has_332);

  // Fig. 2 family flag
  const auto& cat = catalog();
  const CatalogEntry* p = find_by_key(cat, canonical_form(pi3).key);
  CHECK(p->fig2_family);
  CHECK(!find_by_key(cat, canonical_form(linear_diagram(3, 3, 6)).key)->fig2_family);
  int fig2 = 0;
  for (const auto& e : cat)
    if (e.fig2_family) ++fig2;
  CHECK(fig2 == 6);  // the four tailed diagrams, all-pi/3 minus an edge, all-pi/3
}

TEST_CASE("enumeration independent of candidate order (set equality)") {
  // the enumerator canonicalizes before dedup, so set equality against a
  // shuffled-insertion reference reduces to key-set equality
  const auto& cat = catalog();
  std::set<std::string> keys;
  for (const auto& e : cat) keys.insert(e.canonical_key);
  CHECK(keys.size() == 32);
  std::vector<std::string> shuffled(keys.begin(), keys.end());
  std::mt19937 rng(7);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(std::set<std::string>(shuffled.begin(), shuffled.end()) == keys);
}

TEST_CASE("every compact volume is below the largest non-compact volume") {
  const auto& cat = catalog();
  double max_noncompact = 0;
  for (const auto& e : cat)
    if (!e.compact) max_noncompact = std::max(max_noncompact, e.volume.value);
  for (const auto& e : cat)
    if (e.compact) CHECK(e.volume.value < max_noncompact);
}

TEST_CASE("paper actors resolve to the expected diagrams") {
  const auto& cat = catalog();
  PaperActors pa = identify_paper_actors(cat);

  CHECK(cat[pa.h1 - 1].canonical_key == canonical_form(linear_diagram(5, 3, 4)).key);
  CHECK(cat[pa.h10 - 1].canonical_key == canonical_form(linear_diagram(3, 3, 6)).key);
  CHECK(cat[pa.h11 - 1].canonical_key == canonical_form(linear_diagram(3, 4, 4)).key);

  // H_3 is the double of H_1: the branched diagram with a pi/5 leaf
  TetShape star534;
  for (auto& a : star534.a) a = AngleFrac(1, 2);
  star534.angle(0, 1) = AngleFrac(1, 5);
  star534.angle(0, 2) = AngleFrac(1, 3);
  star534.angle(0, 3) = AngleFrac(1, 3);
  CHECK(cat[pa.h3 - 1].canonical_key == canonical_form(star534).key);
  auto r = ratio_integrality(cat[pa.h1 - 1].volume, cat[pa.h3 - 1].volume);
  REQUIRE(r.has_value());
  CHECK(*r == 2);

  // H_31 is the (4,4,4,4) cycle, ratio 12 to H_11
  TetShape cyc4;
  for (auto& a : cyc4.a) a = AngleFrac(1, 2);
  cyc4.angle(0, 1) = AngleFrac(1, 4);
  cyc4.angle(1, 2) = AngleFrac(1, 4);
  cyc4.angle(2, 3) = AngleFrac(1, 4);
  cyc4.angle(0, 3) = AngleFrac(1, 4);
  CHECK(cat[pa.h31 - 1].canonical_key == canonical_form(cyc4).key);
  auto r12 = ratio_integrality(cat[pa.h11 - 1].volume, cat[pa.h31 - 1].volume);
  REQUIRE(r12.has_value());
  CHECK(*r12 == 12);

  // the Fig. 2a family: H_12 has no dihedral angle pi/4, pi/5, pi/6
  for (const auto& a : cat[pa.h12 - 1].diagram.a)
    CHECK((a == AngleFrac(1, 2) || a == AngleFrac(1, 3)));
  CHECK(cat[pa.h12 - 1].fig2_family);
  CHECK(cat[pa.h17 - 1].fig2_family);
  CHECK(cat[pa.h22 - 1].fig2_family);
  CHECK(cat[pa.h26 - 1].fig2_family);
  CHECK(cat[pa.h24 - 1].fig2_family);

  // H_12 = two copies of H_10 (the k=2 container of the [3,3,6] family)
  auto rr = ratio_integrality(cat[pa.h10 - 1].volume, cat[pa.h12 - 1].volume);
  REQUIRE(rr.has_value());
  CHECK(*rr == 2);

  // H_32 is the regular ideal tetrahedron
  TetShape pi3;
  for (auto& a : pi3.a) a = AngleFrac(1, 3);
  CHECK(cat[pa.h32 - 1].canonical_key == canonical_form(pi3).key);
  CHECK(pa.h32 == 32);  // largest non-compact volume sits last
}
