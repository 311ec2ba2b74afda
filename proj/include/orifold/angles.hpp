#pragma once

#include <cmath>
#include <numbers>

namespace orifold {

constexpr double deg_to_rad(double deg) noexcept {
  return deg * (std::numbers::pi / 180.0);
}

constexpr double rad_to_deg(double rad) noexcept {
  return rad * (180.0 / std::numbers::pi);
}

namespace detail {

// sin(deg + 90 * quarter_shift) with the argument reduced to [-45, 45] before
// the radian conversion, so multiples of 90 degrees land on exact 0 / +-1.
inline double sin_deg_shifted(double deg, int quarter_shift) noexcept {
  double r = std::fmod(deg, 360.0);
  double q = std::nearbyint(r / 90.0);
  double t = deg_to_rad(r - 90.0 * q);
  int quadrant = (static_cast<int>(q) + quarter_shift) % 4;
  if (quadrant < 0) quadrant += 4;
  switch (quadrant) {
    case 0: return std::sin(t);
    case 1: return std::cos(t);
    case 2: return -std::sin(t);
    default: return -std::cos(t);
  }
}

}  // namespace detail

inline double sin_deg(double deg) noexcept { return detail::sin_deg_shifted(deg, 0); }
inline double cos_deg(double deg) noexcept { return detail::sin_deg_shifted(deg, 1); }
inline double tan_deg(double deg) noexcept { return sin_deg(deg) / cos_deg(deg); }
inline double acos_deg(double x) noexcept { return rad_to_deg(std::acos(x)); }
inline double atan_deg(double x) noexcept { return rad_to_deg(std::atan(x)); }

}  // namespace orifold
