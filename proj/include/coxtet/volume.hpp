#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "coxtet/lobachevsky.hpp"
#include "coxtet/shape.hpp"

namespace coxtet {

struct VolumeValue {
  double value = 0;
  double err = 0;  // absolute error bound
};

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// General hyperbolic tetrahedron volume from the six dihedral angles
// (slot order as TetShape: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}), via the
// closed dilogarithm form of Murakami-Yano reduced to Clausen values at the
// two roots of the associated complex quadratic.
// Throws std::domain_error when the shape is not hyperbolic.
mpf tet_volume_general(const std::array<mpf, 6>& angles);
double tet_volume_general(const std::array<double, 6>& angles);

// essential angles (alpha, beta, gamma) when the non-right-angle graph is a
// 3-edge path (orthoscheme), relabeled to path order
std::optional<std::array<AngleFrac, 3>> linear_essentials(const TetShape& t);

// Lobachevsky-function volume of the orthoscheme with essential angles
// alpha, beta, gamma.
mpf orthoscheme_volume(const mpf& alpha, const mpf& beta, const mpf& gamma);

// Volume with the built-in cross-check: on linear diagrams the orthoscheme
// formula must agree with the general form within 1e-8.
VolumeValue tet_volume(const TetShape& t);

// nearest integer n with |Vol(P)/Vol(F) - n| < tol, or nullopt.
// Throws precision_error when the volume error bounds are too large for a
// verdict at this tolerance.
std::optional<long long> ratio_integrality(const VolumeValue& F, const VolumeValue& P,
                                           double tol = 1e-6);

// supremum of hyperbolic tetrahedron volumes: the regular ideal tetrahedron
double max_tet_volume();

}  // namespace coxtet
