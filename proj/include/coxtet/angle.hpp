#pragma once

#include <cstdint>
#include <string>

namespace coxtet {

// An exact rational multiple of pi: value = num*pi/den, 0 < num/den <= 1,
// gcd(num,den) = 1.  num/den = 1 (a straight angle) only ever appears as the
// result of a gluing sum, never as a stored dihedral angle of a valid shape.
struct AngleFrac {
  std::int64_t num = 1;
  std::int64_t den = 2;

  AngleFrac() = default;
  AngleFrac(std::int64_t n, std::int64_t d);

  double value() const;  // radians

  bool operator==(const AngleFrac& o) const { return num == o.num && den == o.den; }
  bool operator!=(const AngleFrac& o) const { return !(*this == o); }
  // order by numeric value; exact cross-multiplication
  bool operator<(const AngleFrac& o) const { return num * o.den < o.num * den; }

  bool is_flat() const { return num == den; }
  bool is_right() const { return num == 1 && den == 2; }

  std::string str() const;  // "num/den"
};

enum class AngleSumKind { Angle, Flat, Reflex };

struct AngleSum {
  AngleSumKind kind;
  AngleFrac angle;  // meaningful for Angle (sum < pi) and Flat (1/1)
};

// Exact rational sum of two angles, tagged Flat when it equals pi and
// Reflex when it exceeds pi.
AngleSum angle_add(const AngleFrac& a, const AngleFrac& b);

// cos(num*pi/den).  Exact rational shortcuts for den in {1,2,3}; otherwise
// std::cos on the double-precision argument (53 correct bits).
double cos_of(const AngleFrac& a);
double sin_of(const AngleFrac& a);

}  // namespace coxtet
