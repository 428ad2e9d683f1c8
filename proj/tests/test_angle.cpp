#include "doctest.h"

#include <cmath>

#include "coxtet/angle.hpp"

using namespace coxtet;

TEST_CASE("angle_add tags sums against pi") {
  // pi/4 + 3pi/4 is flat
  auto s = angle_add(AngleFrac(1, 4), AngleFrac(3, 4));
  CHECK(s.kind == AngleSumKind::Flat);

  // pi/3 + pi/3 = 2pi/3
  s = angle_add(AngleFrac(1, 3), AngleFrac(1, 3));
  CHECK(s.kind == AngleSumKind::Angle);
  CHECK(s.angle == AngleFrac(2, 3));

  // 2pi/5 + 4pi/5 exceeds pi
  s = angle_add(AngleFrac(2, 5), AngleFrac(4, 5));
  CHECK(s.kind == AngleSumKind::Reflex);
}

TEST_CASE("angle normalization") {
  AngleFrac a(2, 6);
  CHECK(a.num == 1);
  CHECK(a.den == 3);
  CHECK(AngleFrac(3, 6) == AngleFrac(1, 2));
  CHECK(AngleFrac(1, 4) < AngleFrac(1, 3));
  CHECK_THROWS(AngleFrac(5, 4));
  CHECK_THROWS(AngleFrac(0, 4));
}

TEST_CASE("cos_of exact shortcuts and precision") {
  CHECK(cos_of(AngleFrac(1, 2)) == 0.0);
  CHECK(cos_of(AngleFrac(1, 3)) == 0.5);
  CHECK(cos_of(AngleFrac(2, 3)) == -0.5);
  // pi/5: root of 4x^2 - 2x - 1 (oracle: closed-form root)
  double root = (2 + std::sqrt(4 + 16.0)) / 8.0;
  CHECK(std::fabs(cos_of(AngleFrac(1, 5)) - root) < 1e-15);
  CHECK(cos_of(AngleFrac(1, 5)) == doctest::Approx(0.8090169943749474).epsilon(1e-14));
}
