#include "doctest.h"

#include <set>

#include "coxtet/canonical.hpp"

using namespace coxtet;

TEST_CASE("canonical key independent of labeling") {
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 3);
  std::set<std::string> keys;
  for (const auto& p : all_perms4()) keys.insert(canonical_form(relabel(t, p)).key);
  CHECK(keys.size() == 1);  // full symmetry: all 24 agree

  TetShape h = linear_diagram(3, 3, 6);
  keys.clear();
  for (const auto& p : all_perms4()) keys.insert(canonical_form(relabel(h, p)).key);
  CHECK(keys.size() == 1);

  // [3,3,6] vs [6,3,3] input orderings
  CHECK(canonical_form(linear_diagram(3, 3, 6)).key == canonical_form(linear_diagram(6, 3, 3)).key);
  CHECK(canonical_form(linear_diagram(5, 3, 4)).key == canonical_form(linear_diagram(4, 3, 5)).key);
}

TEST_CASE("distinct shapes get distinct keys") {
  CHECK(canonical_form(linear_diagram(3, 3, 6)).key != canonical_form(linear_diagram(3, 6, 3)).key);
  CHECK(canonical_form(linear_diagram(5, 3, 4)).key != canonical_form(linear_diagram(5, 3, 5)).key);
}

TEST_CASE("minimizing permutation reproduces the canonical shape") {
  TetShape h = linear_diagram(5, 3, 4);
  for (const auto& p : all_perms4()) {
    TetShape r = relabel(h, p);
    CanonicalForm cf = canonical_form(r);
    CHECK(relabel(r, cf.perm) == cf.shape);
  }
}

TEST_CASE("symmetries form a group containing identity") {
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 3);
  CHECK(shape_symmetries(t).size() == 24);

  TetShape h = linear_diagram(3, 3, 6);
  auto sym = shape_symmetries(h);
  CHECK(sym.size() == 1);  // asymmetric path

  TetShape s = linear_diagram(3, 5, 3);
  CHECK(shape_symmetries(s).size() == 2);  // path reversal
}

TEST_CASE("perm utilities") {
  Perm4 p = {2, 0, 3, 1};
  Perm4 q = perm_inverse(p);
  CHECK(perm_compose(p, q) == Perm4{0, 1, 2, 3});
  CHECK(perm_compose(q, p) == Perm4{0, 1, 2, 3});
}
