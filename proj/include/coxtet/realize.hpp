#pragma once

#include <array>
#include <complex>
#include <optional>

#include "coxtet/canonical.hpp"
#include "coxtet/linalg.hpp"
#include "coxtet/shape.hpp"

namespace coxtet {

// A generalized tetrahedron realized in the hyperboloid model: Minkowski
// form diag(1,1,1,-1), H^3 = {<x,x> = -1, x[3] > 0}.  Face i has outward
// unit spacelike normal n_i; the body is the intersection of <x,n_i> <= 0.
// The vertex opposite face i is stored with <v,v> = -1 if finite and with
// the scale <v, n_i> = -1 if ideal (null), both future-pointing.
struct TetRealization {
  std::array<Vec4, 4> normals;
  std::array<Vec4, 4> vertices;
  std::array<VertexType, 4> vtype;

  Mat4 gram() const;  // <n_i, n_j>
};

// Deterministic standard realization from the Gram eigendecomposition.
TetRealization realize(const Mat4& gram, double tol = kSignatureTol);
TetRealization realize(const TetShape& t, double tol = kSignatureTol);

// Realization with prescribed face normals (kept in the given order).
TetRealization realization_from_normals(const std::array<Vec4, 4>& normals, double tol = 1e-7);

// strictly inside all four half-spaces, margin in the Minkowski products
bool point_inside(const TetRealization& r, const Vec4& x, double margin);

// normalized future timelike point from positive weights on the vertices
Vec4 interior_point(const TetRealization& r, const std::array<double, 4>& weights);

// Minkowski-orthonormal frame adapted to a face: columns are
// (toward corner1, completing in-plane direction signed toward corner2,
//  face normal, face incenter).  corner1/corner2 are vertex indices on the
// face (!= face).
Mat4 face_frame(const TetRealization& r, int face, int corner1, int corner2);

// Isometry seating a tetrahedron "src" onto "dst" so that src face q lands
// on dst face p with reversed normal (src body on the far side of the
// plane), matching corner vertices src:c1,c2 -> dst:c1',c2'.
Mat4 seat_across(const TetRealization& dst, int p, int c1d, int c2d,
                 const TetRealization& src, int q, int c1s, int c2s);

// Isometry with g(frameA) = frameB for Minkowski-orthonormal frames.
Mat4 frame_map(const Mat4& from, const Mat4& to);

bool is_minkowski_isometry(const Mat4& g, double tol);

// In-plane outward normal of the side of face f along edge f^a.
Vec4 face_side_normal(const TetRealization& r, int f, int a);

// Hyperbolic incenter of the face triangle (timelike, future, unit).
Vec4 face_incenter(const TetRealization& r, int f);

// --- upper half-space chart at an ideal point -------------------------------
// For a future null vector L this maps H^3 to the upper half-space with L at
// infinity.  Planes through L become vertical; their Euclidean boundary
// lines are returned as (unit normal, offset): {y : n.y = c}, with n the
// outward direction inherited from the plane normal.
struct UpperHalfSpace {
  Vec4 L;        // the null direction at infinity
  Vec4 Lp;       // opposite null vector, <L,Lp> = -1
  Vec4 u1, u2;   // spacelike orthonormal, orthogonal to L and Lp

  // Euclidean boundary trace of a hyperplane through L (requires <e,L> ~ 0).
  struct Line {
    double nx, ny, c;  // {(x,y): nx*x + ny*y = c}, (nx,ny) unit
  };
  Line trace_line(const Vec4& e) const;

  // horospherical position of another null vector (an ideal point != L)
  std::array<double, 2> ideal_point(const Vec4& w) const;
};

UpperHalfSpace upper_half_space_at(const Vec4& L);

// 4D "cross product": the vector Minkowski-orthogonal to a, b, c.
Vec4 minkowski_orthogonal(const Vec4& a, const Vec4& b, const Vec4& c);

}  // namespace coxtet
