#pragma once

#include <array>
#include <string>

#include "coxtet/angle.hpp"
#include "coxtet/linalg.hpp"

namespace coxtet {

enum class VertexType { Finite, Ideal, Invalid };

constexpr double kSignatureTol = 1e-9;

// A generalized tetrahedron given by its 6 dihedral angles, indexed by
// unordered face pairs {i,j}.  Faces are 0..3; the vertex opposite face i is
// the meet of the other three face planes, and its link is the principal 3x3
// Gram submatrix omitting row/column i.
struct TetShape {
  // slot order: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
  std::array<AngleFrac, 6> a;

  static int pair_index(int i, int j);

  const AngleFrac& angle(int i, int j) const { return a[pair_index(i, j)]; }
  AngleFrac& angle(int i, int j) { return a[pair_index(i, j)]; }

  // all six angles of Coxeter form pi/m
  bool is_coxeter() const;

  bool operator==(const TetShape& o) const { return a == o.a; }

  std::string str() const;
};

// Convenience constructors.
// Linear diagram [p,q,r]: angles pi/p at {0,1}, pi/q at {1,2}, pi/r at {2,3},
// pi/2 elsewhere.
TetShape linear_diagram(int p, int q, int r);
// All angles pi/2 except the given assignments.
TetShape shape_from(const std::array<std::array<int, 3>, 6>& entries);

Mat4 gram_matrix(const TetShape& t);

// Link Gram of the vertex opposite face v (the 3x3 principal submatrix
// omitting row/column v).
Mat3 vertex_link_gram(const TetShape& t, int v);

VertexType vertex_type(const TetShape& t, int v, double tol = kSignatureTol);

// Planar angle of face f at the vertex v (v != f), via the dual spherical
// law of cosines on the vertex link.  Returns a value in [0, pi); ideal
// vertices give 0.
double face_angle(const TetShape& t, int f, int v);

// signature (3,1) and every vertex Finite or Ideal
bool is_hyperbolic(const TetShape& t, double tol = kSignatureTol);

// number of Ideal vertices (valid shapes only)
int ideal_vertex_count(const TetShape& t, double tol = kSignatureTol);

// The three unordered opposite edge pairs of a tetrahedron, as face pairs:
// ({0,1},{2,3}), ({0,2},{1,3}), ({0,3},{1,2}).
struct EdgePair {
  int i, j, k, l;
};
std::array<EdgePair, 3> opposite_edge_pairs();

}  // namespace coxtet
