#include "coxtet/canonical.hpp"

#include <algorithm>

namespace coxtet {

const std::vector<Perm4>& all_perms4() {
  static const std::vector<Perm4> perms = [] {
    std::vector<Perm4> v;
    Perm4 p = {0, 1, 2, 3};
    do {
      v.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return perms;
}

Perm4 perm_inverse(const Perm4& p) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[p[i]] = i;
  return r;
}

Perm4 perm_compose(const Perm4& p, const Perm4& q) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = p[q[i]];
  return r;
}

TetShape relabel(const TetShape& t, const Perm4& p) {
  TetShape r;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) r.angle(p[i], p[j]) = t.angle(i, j);
  return r;
}

namespace {

// compare 6-slot angle tuples; slot order as in TetShape
bool tuple_less(const TetShape& x, const TetShape& y) {
  for (int k = 0; k < 6; ++k) {
    if (x.a[k] < y.a[k]) return true;
    if (y.a[k] < x.a[k]) return false;
  }
  return false;
}

}  // namespace

CanonicalForm canonical_form(const TetShape& t) {
  CanonicalForm best;
  bool first = true;
  for (const auto& p : all_perms4()) {
    TetShape cand = relabel(t, p);
    if (first || tuple_less(cand, best.shape)) {
      best.shape = cand;
      best.perm = p;
      first = false;
    }
    // perms iterate in lex order, so ties keep the earlier (smaller) one
  }
  best.key = best.shape.str();
  return best;
}

std::vector<Perm4> canonicalizing_perms(const TetShape& t) {
  CanonicalForm cf = canonical_form(t);
  std::vector<Perm4> out;
  for (const auto& p : all_perms4())
    if (relabel(t, p) == cf.shape) out.push_back(p);
  return out;
}

std::vector<Perm4> shape_symmetries(const TetShape& t) {
  std::vector<Perm4> out;
  for (const auto& p : all_perms4())
    if (relabel(t, p) == t) out.push_back(p);
  return out;
}

}  // namespace coxtet
