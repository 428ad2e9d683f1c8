#pragma once

#include <array>
#include <string>
#include <vector>

#include "coxtet/shape.hpp"

namespace coxtet {

using Perm4 = std::array<int, 4>;

// all 24 permutations of {0,1,2,3} in lexicographic order
const std::vector<Perm4>& all_perms4();

Perm4 perm_inverse(const Perm4& p);
Perm4 perm_compose(const Perm4& p, const Perm4& q);  // (p o q)(i) = p[q[i]]

// the shape with faces relabeled: result.angle(p[i], p[j]) = t.angle(i, j)
TetShape relabel(const TetShape& t, const Perm4& p);

struct CanonicalForm {
  TetShape shape;    // lexicographically minimal relabeling
  Perm4 perm;        // one minimizing permutation (smallest in one-line notation)
  std::string key;   // serialized minimal angle tuple
};

// Lexicographically minimal encoding of the 6 angle slots over all 24 face
// relabelings; ties broken by the smallest permutation in one-line notation.
CanonicalForm canonical_form(const TetShape& t);

// all permutations that map t onto its canonical labeling (coset of the
// labeled-shape stabilizer; size = |Sym(shape)|)
std::vector<Perm4> canonicalizing_perms(const TetShape& t);

// permutations fixing the angle labeling of t (the symmetry group of the
// labeled shape)
std::vector<Perm4> shape_symmetries(const TetShape& t);

}  // namespace coxtet
