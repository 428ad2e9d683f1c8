#include "doctest.h"

#include <cmath>

#include "coxtet/canonical.hpp"
#include "coxtet/lobachevsky.hpp"
#include "coxtet/volume.hpp"

using namespace coxtet;

namespace {

// quadrature oracle for the defining integral
//   L(t) = -int_0^t log|2 sin s| ds = t - t log(2t) - int_0^t log(sin s / s) ds
// with the remaining integrand smooth at 0 (adaptive Simpson).
double log_sinc(double s) {
  if (std::fabs(s) < 1e-8) return -s * s / 6.0;
  return std::log(std::sin(s) / s);
}

double simpson(double a, double b, double fa, double fm, double fb, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = log_sinc(lm), frm = log_sinc(rm);
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth > 40 || std::fabs(left + right - whole) < 15 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson(a, m, fa, flm, fm, eps / 2, depth + 1) +
         simpson(m, b, fm, frm, fb, eps / 2, depth + 1);
}

double lobachevsky_quadrature(double theta) {
  double smooth = simpson(0, theta, log_sinc(0), log_sinc(theta / 2), log_sinc(theta), 1e-15, 0);
  return theta - theta * std::log(2 * theta) - smooth;
}

TetShape all_pi3() {
  TetShape t;
  for (auto& x : t.a) x = AngleFrac(1, 3);
  return t;
}

}  // namespace

TEST_CASE("Lobachevsky function basics") {
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::fabs(lobachevsky(M_PI / 2)) < 1e-15);
  // frozen from the quadrature oracle
  double q6 = lobachevsky_quadrature(M_PI / 6);
  CHECK(q6 == doctest::Approx(0.5074708032).epsilon(1e-9));
  CHECK(std::fabs(lobachevsky(M_PI / 6) - q6) < 1e-12);
  double q5 = lobachevsky_quadrature(M_PI / 5);
  CHECK(std::fabs(lobachevsky(M_PI / 5) - q5) < 1e-12);
  double q7 = lobachevsky_quadrature(1.1);
  CHECK(std::fabs(lobachevsky(1.1) - q7) < 1e-12);
  // mp and double paths agree
  CHECK(std::fabs(static_cast<double>(lobachevsky(mpf(M_PI) / 6)) - lobachevsky(M_PI / 6)) <
        1e-15);
}

TEST_CASE("Lobachevsky symmetry identities on a grid") {
  for (int i = 1; i <= 1000; ++i) {
    double t = -2.0 + 5.0 * i / 1000.0;
    CHECK(std::fabs(lobachevsky(M_PI - t) + lobachevsky(t)) < 1e-12);
    CHECK(std::fabs(lobachevsky(t + M_PI) - lobachevsky(t)) < 1e-12);
  }
  // Cl2 relation
  CHECK(clausen2(2.0) == doctest::Approx(2 * lobachevsky(1.0)).epsilon(1e-15));
}

TEST_CASE("ideal regular tetrahedron volume is 3 L(pi/3)") {
  VolumeValue v = tet_volume(all_pi3());
  CHECK(v.value == doctest::Approx(3 * lobachevsky(M_PI / 3)).epsilon(1e-12));
  CHECK(v.value == doctest::Approx(1.0149416064).epsilon(1e-9));
}

TEST_CASE("[3,3,6] volume against the orthoscheme oracle") {
  // independent orthoscheme evaluation
  mpf a = mp_pi() / 3, b = mp_pi() / 3, g = mp_pi() / 6;
  double ortho = static_cast<double>(orthoscheme_volume(a, b, g));
  CHECK(ortho == doctest::Approx(0.0422892336).epsilon(1e-9));
  VolumeValue v = tet_volume(linear_diagram(3, 3, 6));
  CHECK(v.value == doctest::Approx(ortho).epsilon(1e-12));
}

TEST_CASE("maximal unbounded ratio is 24") {
  VolumeValue small = tet_volume(linear_diagram(3, 3, 6));
  VolumeValue big = tet_volume(all_pi3());
  CHECK(big.value / small.value == doctest::Approx(24.0).epsilon(1e-9));
  auto n = ratio_integrality(small, big);
  REQUIRE(n.has_value());
  CHECK(*n == 24);
  CHECK(ratio_integrality(small, small) == 1);
}

TEST_CASE("volume invariant under the 24 relabelings") {
  TetShape t = linear_diagram(5, 3, 4);
  double ref = tet_volume(t).value;
  CHECK(ref == doctest::Approx(0.0358850633).epsilon(1e-7));  // known [5,3,4] volume
  for (const auto& p : all_perms4())
    CHECK(tet_volume(relabel(t, p)).value == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("monotone volume in the one-parameter family [m,3,6]") {
  // [3,3,4] and [3,3,5] are finite Coxeter groups (spherical shapes), so the
  // hyperbolic one-parameter family through [3,3,6] is [m,3,6], m = 3..6.
  double v3 = tet_volume(linear_diagram(3, 3, 6)).value;
  double v4 = tet_volume(linear_diagram(4, 3, 6)).value;
  double v5 = tet_volume(linear_diagram(5, 3, 6)).value;
  double v6 = tet_volume(linear_diagram(6, 3, 6)).value;
  CHECK(v3 < v4);
  CHECK(v4 < v5);
  CHECK(v5 < v6);
}

TEST_CASE("volume bound: everything below the ideal regular supremum") {
  for (auto t : {linear_diagram(5, 3, 4), linear_diagram(5, 3, 5), linear_diagram(3, 5, 3),
                 linear_diagram(4, 3, 6), linear_diagram(6, 3, 6)})
    CHECK(tet_volume(t).value < max_tet_volume() + 1e-9);
}

TEST_CASE("non-hyperbolic shapes are domain errors") {
  TetShape sph;
  for (auto& x : sph.a) x = AngleFrac(1, 2);
  CHECK_THROWS_AS(tet_volume(sph), std::domain_error);
}

TEST_CASE("ratio integrality rejects non-integer ratios") {
  VolumeValue a{0.1, 1e-12}, b{0.25, 1e-12};
  CHECK(!ratio_integrality(a, b).has_value());
  VolumeValue big_err{0.1, 1e-3};
  CHECK_THROWS_AS(ratio_integrality(big_err, b), precision_error);
}
