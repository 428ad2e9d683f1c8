#include "coxtet/lobachevsky.hpp"

#include <cmath>
#include <vector>

namespace coxtet {

const mpf& mp_pi() {
  static const mpf pi = acos(mpf(-1));
  return pi;
}

namespace {

// zeta(2n) for n = 1.. via Euler's convolution
//   (n + 1/2) zeta(2n) = sum_{k=1}^{n-1} zeta(2k) zeta(2n-2k),  zeta(2) = pi^2/6
template <typename Real>
const std::vector<Real>& zeta_even_table(const Real& pi, int count) {
  static const std::vector<Real> z = [&] {
    std::vector<Real> v(count + 1, Real(0));
    v[1] = pi * pi / 6;
    for (int n = 2; n <= count; ++n) {
      Real s = 0;
      for (int k = 1; k < n; ++k) s += v[k] * v[n - k];
      v[n] = s / (Real(n) + Real(1) / 2);
    }
    return v;
  }();
  return z;
}

template <typename Real>
Real lob_impl(Real theta, const Real& pi, const Real& eps, int max_terms) {
  using std::floor;
  using std::log;
  Real t = theta - pi * floor(theta / pi);
  Real sign = 1;
  if (t > pi / 2) {
    t = pi - t;
    sign = -1;
  }
  if (t == 0) return Real(0);
  const auto& z = zeta_even_table<Real>(pi, max_terms);
  Real x2 = (t / pi) * (t / pi);
  Real pw = x2;
  Real sum = 0;
  for (int n = 1; n <= max_terms; ++n) {
    Real term = z[n] * pw / (Real(n) * Real(2 * n + 1));
    sum += term;
    if (term < eps) break;
    pw *= x2;
  }
  return sign * (t - t * log(2 * t) + t * sum);
}

}  // namespace

mpf lobachevsky(const mpf& theta) {
  static const mpf eps = pow(mpf(10), -70);
  return lob_impl<mpf>(theta, mp_pi(), eps, 160);
}

double lobachevsky(double theta) {
  return lob_impl<double>(theta, M_PI, 1e-19, 40);
}

mpf clausen2(const mpf& theta) { return 2 * lobachevsky(theta / 2); }

double clausen2(double theta) { return 2 * lobachevsky(theta / 2); }

}  // namespace coxtet
