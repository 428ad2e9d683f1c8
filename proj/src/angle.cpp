#include "coxtet/angle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coxtet {

AngleFrac::AngleFrac(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (n <= 0 || d <= 0) throw std::invalid_argument("AngleFrac: positive num/den required");
  std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
  if (num > den) throw std::invalid_argument("AngleFrac: angle exceeds pi");
}

double AngleFrac::value() const {
  return static_cast<double>(num) * M_PI / static_cast<double>(den);
}

std::string AngleFrac::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

AngleSum angle_add(const AngleFrac& a, const AngleFrac& b) {
  std::int64_t n = a.num * b.den + b.num * a.den;
  std::int64_t d = a.den * b.den;
  std::int64_t g = std::gcd(n, d);
  n /= g;
  d /= g;
  if (n == d) return {AngleSumKind::Flat, AngleFrac(1, 1)};
  if (n > d) return {AngleSumKind::Reflex, AngleFrac(1, 1)};
  return {AngleSumKind::Angle, AngleFrac(n, d)};
}

double cos_of(const AngleFrac& a) {
  if (a.den == 1) return -1.0;  // pi
  if (a.den == 2) return 0.0;   // pi/2
  if (a.den == 3) return a.num == 1 ? 0.5 : -0.5;
  return std::cos(a.value());
}

double sin_of(const AngleFrac& a) {
  if (a.den == 1) return 0.0;
  if (a.den == 2) return 1.0;
  return std::sin(a.value());
}

}  // namespace coxtet
