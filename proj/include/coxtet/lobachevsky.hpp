#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace coxtet {

// working precision of the volume engine: 64 decimal digits
using mpf = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>>;

const mpf& mp_pi();

// Lobachevsky function L(t) = -int_0^t log|2 sin s| ds, odd and pi-periodic.
// Evaluated after symmetry reduction by the zeta-accelerated power series
//   L(t) = t - t log(2t) + sum_{n>=1} zeta(2n) t^{2n+1} / (n (2n+1) pi^{2n}),
// which converges geometrically on [0, pi/2].
mpf lobachevsky(const mpf& theta);
double lobachevsky(double theta);

// Clausen function Cl2(t) = 2 L(t/2), 2*pi-periodic.
mpf clausen2(const mpf& theta);
double clausen2(double theta);

}  // namespace coxtet
