#include "coxtet/volume.hpp"

#include <cmath>

namespace coxtet {

namespace {

template <typename Real>
struct Cx {
  Real re{}, im{};
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx operator/(const Cx& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
};

template <typename Real>
Cx<Real> cx_sqrt(const Cx<Real>& z) {
  using std::atan2;
  using std::cos;
  using std::sin;
  using std::sqrt;
  Real r = sqrt(z.re * z.re + z.im * z.im);
  Real a = atan2(z.im, z.re) / 2;
  Real m = sqrt(r);
  return {m * cos(a), m * sin(a)};
}

template <typename Real>
Cx<Real> unit(const Real& phase) {
  using std::cos;
  using std::sin;
  return {cos(phase), sin(phase)};
}

template <typename Real>
Real cl2(const Real& x);

template <>
mpf cl2<mpf>(const mpf& x) {
  return clausen2(x);
}
template <>
double cl2<double>(const double& x) {
  return clausen2(x);
}

template <typename Real>
Real pi_of();
template <>
mpf pi_of<mpf>() {
  return mp_pi();
}
template <>
double pi_of<double>() {
  return M_PI;
}

// Murakami-Yano: with a..f = exp(i*angle) on the edge pairs (A,D),(B,E),(C,F)
// the two critical points z1, z2 of
//   U(z) = 1/2 [Li2(z) + Li2(z abde) + Li2(z acdf) + Li2(z bcef)
//               - Li2(-z abc) - Li2(-z aef) - Li2(-z bdf) - Li2(-z cde)]
// solve a complex quadratic; for an actual hyperbolic tetrahedron they lie
// on the unit circle and Vol = |Im U(z1) - Im U(z2)|, which reduces to
// Clausen values of the eight phases.
template <typename Real>
Real volume_impl(const std::array<Real, 6>& ang) {
  using std::atan2;
  using std::fabs;
  using std::sqrt;
  const Real pi = pi_of<Real>();
  // edges at vertex v0 are the face pairs {1,2},{1,3},{2,3}; opposite edges
  // {0,3},{0,2},{0,1}
  const Real A = ang[3], B = ang[4], C = ang[5];
  const Real D = ang[2], E = ang[1], F = ang[0];

  const std::array<Real, 4> h = {Real(0), A + B + D + E, A + C + D + F, B + C + E + F};
  const std::array<Real, 4> v = {A + B + C, A + E + F, B + D + F, C + D + E};

  Cx<Real> w2 = unit(h[1]), w3 = unit(h[2]), w4 = unit(h[3]);
  Cx<Real> u1 = unit(v[0]), u2 = unit(v[1]), u3 = unit(v[2]), u4 = unit(v[3]);

  Cx<Real> one{Real(1), Real(0)};
  Cx<Real> e1w = one + w2 + w3 + w4;
  Cx<Real> e2w = w2 + w3 + w4 + w2 * w3 + w2 * w4 + w3 * w4;
  Cx<Real> e3w = w2 * w3 + w2 * w4 + w3 * w4 + w2 * w3 * w4;
  Cx<Real> e1u = u1 + u2 + u3 + u4;
  Cx<Real> e2u = u1 * u2 + u1 * u3 + u1 * u4 + u2 * u3 + u2 * u4 + u3 * u4;
  Cx<Real> e3u = u1 * u2 * u3 + u1 * u2 * u4 + u1 * u3 * u4 + u2 * u3 * u4;

  // q2 z^2 - q1 z + q0 = 0
  Cx<Real> q2 = e3w + e3u, q1 = e2w - e2u, q0 = e1w + e1u;

  Real q2n = sqrt(q2.re * q2.re + q2.im * q2.im);
  if (q2n < Real(1e-12)) throw std::domain_error("tet_volume: degenerate quadratic");
  Cx<Real> disc = q1 * q1 - Cx<Real>{Real(4), Real(0)} * q2 * q0;
  Cx<Real> rt = cx_sqrt(disc);
  Cx<Real> two_q2 = Cx<Real>{Real(2), Real(0)} * q2;
  Cx<Real> z1 = (q1 + rt) / two_q2;
  Cx<Real> z2 = (q1 - rt) / two_q2;

  Real m1 = sqrt(z1.re * z1.re + z1.im * z1.im);
  Real m2 = sqrt(z2.re * z2.re + z2.im * z2.im);
  if (fabs(m1 - 1) > Real(1e-7) || fabs(m2 - 1) > Real(1e-7))
    throw std::domain_error("tet_volume: roots off the unit circle (shape not hyperbolic)");

  Real Z1 = atan2(z1.im, z1.re);
  Real Z2 = atan2(z2.im, z2.re);

  auto G = [&](const Real& Z) {
    Real s = 0;
    for (int i = 0; i < 4; ++i) s += cl2<Real>(Z + h[i]);
    for (int i = 0; i < 4; ++i) s -= cl2<Real>(Z + v[i] + pi);
    return s / 4;
  };
  Real vol = G(Z1) - G(Z2);
  return vol < 0 ? -vol : vol;
}

}  // namespace

mpf tet_volume_general(const std::array<mpf, 6>& angles) { return volume_impl<mpf>(angles); }

double tet_volume_general(const std::array<double, 6>& angles) {
  return volume_impl<double>(angles);
}

std::optional<std::array<AngleFrac, 3>> linear_essentials(const TetShape& t) {
  // collect non-right edges; a 3-orthoscheme has them forming a 3-edge path
  int deg[4] = {0, 0, 0, 0};
  std::array<std::array<int, 2>, 6> edges;
  int ne = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!t.angle(i, j).is_right()) {
        edges[ne++] = {i, j};
        ++deg[i];
        ++deg[j];
      }
  if (ne != 3) return std::nullopt;
  int ends = 0, mids = 0;
  int first_end = -1;
  for (int i = 0; i < 4; ++i) {
    if (deg[i] == 1) {
      if (first_end < 0) first_end = i;
      ++ends;
    } else if (deg[i] == 2)
      ++mids;
  }
  if (ends != 2 || mids != 2) return std::nullopt;
  // walk the path from first_end
  std::array<int, 4> order{};
  order[0] = first_end;
  bool used[6] = {};
  for (int step = 0; step < 3; ++step) {
    for (int e = 0; e < ne; ++e) {
      if (used[e]) continue;
      if (edges[e][0] == order[step] || edges[e][1] == order[step]) {
        order[step + 1] = edges[e][0] == order[step] ? edges[e][1] : edges[e][0];
        used[e] = true;
        break;
      }
    }
  }
  return std::array<AngleFrac, 3>{t.angle(order[0], order[1]), t.angle(order[1], order[2]),
                                  t.angle(order[2], order[3])};
}

mpf orthoscheme_volume(const mpf& alpha, const mpf& beta, const mpf& gamma) {
  const mpf pi = mp_pi();
  mpf cb = cos(beta), sa = sin(alpha), sg = sin(gamma);
  mpf under = cb * cb - sa * sa * sg * sg;
  if (under <= 0) throw std::domain_error("orthoscheme_volume: not a hyperbolic orthoscheme");
  mpf theta = atan(sqrt(under) / (cos(alpha) * cos(gamma)));
  auto L = [](const mpf& x) { return lobachevsky(x); };
  return (L(alpha + theta) - L(alpha - theta) + L(gamma + theta) - L(gamma - theta) -
          L(pi / 2 - beta + theta) + L(pi / 2 - beta - theta) + 2 * L(pi / 2 - theta)) /
         4;
}

VolumeValue tet_volume(const TetShape& t) {
  if (!is_hyperbolic(t)) throw std::domain_error("tet_volume: shape is not hyperbolic");
  std::array<mpf, 6> ang;
  const mpf pi = mp_pi();
  for (int k = 0; k < 6; ++k) ang[k] = pi * t.a[k].num / t.a[k].den;
  mpf vol = tet_volume_general(ang);
  if (auto ess = linear_essentials(t)) {
    mpf alpha = pi * (*ess)[0].num / (*ess)[0].den;
    mpf beta = pi * (*ess)[1].num / (*ess)[1].den;
    mpf gamma = pi * (*ess)[2].num / (*ess)[2].den;
    mpf ortho = orthoscheme_volume(alpha, beta, gamma);
    mpf diff = vol - ortho;
    if (diff < 0) diff = -diff;
    if (diff > mpf(1) / 100000000)
      throw std::runtime_error("tet_volume: general and orthoscheme formulas disagree");
  }
  return {static_cast<double>(vol), 1e-12};
}

std::optional<long long> ratio_integrality(const VolumeValue& F, const VolumeValue& P,
                                           double tol) {
  if (F.value <= 0) throw std::domain_error("ratio_integrality: nonpositive volume");
  double ratio = P.value / F.value;
  double ratio_err = (P.err + ratio * F.err) / F.value;
  if (ratio_err > tol / 10)
    throw precision_error("ratio_integrality: volume error too large for verdict");
  long long n = std::llround(ratio);
  if (n >= 1 && std::fabs(ratio - static_cast<double>(n)) < tol) return n;
  return std::nullopt;
}

double max_tet_volume() { return 3 * lobachevsky(M_PI / 3); }

}  // namespace coxtet
