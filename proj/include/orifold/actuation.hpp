#pragma once

// Servo -> extension wheel -> cable -> fold angle chain, plus the servo's
// latency and power figures.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "orifold/angles.hpp"
#include "orifold/errors.hpp"
#include "orifold/fold_geometry.hpp"

namespace orifold {

struct VoltageLevel {
  double volts = 5.0;
  double sweep_time_s = 0.48;    // seconds per 180 deg of servo travel
  double servo_current_a = 1.9;  // amperes drawn by the servo at this voltage

  bool operator==(const VoltageLevel&) const = default;
};

struct CalibrationPoint {
  double servo_deg = 0.0;
  double theta_deg = 0.0;

  bool operator==(const CalibrationPoint&) const = default;
};

struct ActuatorConfig {
  double wheel_diameter = 40.0;  // mm
  double servo_min = 0.0;        // deg
  double servo_max = 180.0;      // deg
  // First entry is the reference voltage. The 8.4 V current is back-computed
  // from the 23.645 W system figure: (23.645 - 0.125) / 8.4 = 2.8 A.
  std::vector<VoltageLevel> voltages{{5.0, 0.48, 1.9}, {8.4, 0.39, 2.8}};
  double controller_power_w = 0.125;  // 5 V x 0.025 A
  std::vector<CalibrationPoint> calibration{{0.0, 130.0}, {60.0, 100.0}, {120.0, 58.0}};
  int n_active = 3;  // units spanned by one cable path (geometric mode)

  double reference_voltage() const { return voltages.front().volts; }

  bool operator==(const ActuatorConfig&) const = default;
};

enum class MappingMode { Geometric, Calibrated };

struct ActuationCommand {
  double servo_deg = 0.0;
  double voltage = 5.0;

  bool operator==(const ActuationCommand&) const = default;
};

struct ThetaEstimate {
  double theta = 0.0;
  bool clamped = false;  // calibrated extrapolation left (0, 180]
};

// Smallest fold angle a clamped extrapolation returns.
inline constexpr double kMinFoldAngle = 1e-6;

inline void validate(const ActuatorConfig& c) {
  if (!(c.wheel_diameter > 0.0)) throw DomainError("wheel_diameter", "must be > 0");
  if (!(c.servo_min >= 0.0 && c.servo_min < c.servo_max)) {
    throw DomainError("servo_range", "need 0 <= min < max");
  }
  if (c.voltages.empty()) throw DomainError("voltages", "voltage table is empty");
  for (const auto& v : c.voltages) {
    if (!(v.volts > 0.0)) throw DomainError("voltages", "volts must be > 0");
    if (!(v.sweep_time_s > 0.0)) throw DomainError("voltages", "sweep_time_s must be > 0");
    if (!(v.servo_current_a >= 0.0)) throw DomainError("voltages", "servo_current_a must be >= 0");
  }
  if (!(c.controller_power_w >= 0.0)) throw DomainError("controller_power_w", "must be >= 0");
  if (c.calibration.empty()) throw DomainError("calibration", "calibration table is empty");
  if (c.calibration.front().servo_deg != 0.0) {
    throw DomainError("calibration", "first calibration servo angle must be 0");
  }
  for (std::size_t k = 1; k < c.calibration.size(); ++k) {
    if (!(c.calibration[k].servo_deg > c.calibration[k - 1].servo_deg)) {
      throw DomainError("calibration", "servo angles must be strictly increasing");
    }
    if (!(c.calibration[k].theta_deg < c.calibration[k - 1].theta_deg)) {
      throw DomainError("calibration", "fold angles must be strictly decreasing");
    }
  }
  for (const auto& k : c.calibration) validate_theta(k.theta_deg);
  if (c.n_active < 1) throw DomainError("n_active", "must be >= 1");
}

inline void check_servo(const ActuatorConfig& c, double servo_deg) {
  if (!(servo_deg >= c.servo_min && servo_deg <= c.servo_max)) {
    throw DomainError("servo", "servo angle " + std::to_string(servo_deg) +
                                   " deg outside [" + std::to_string(c.servo_min) + ", " +
                                   std::to_string(c.servo_max) + "]");
  }
}

inline const VoltageLevel& voltage_level(const ActuatorConfig& c, double volts) {
  for (const auto& v : c.voltages) {
    if (std::abs(v.volts - volts) < 1e-9) return v;
  }
  throw ConfigError("unknown voltage " + std::to_string(volts) + " V (not in voltage table)");
}

inline void validate(const ActuationCommand& cmd, const ActuatorConfig& c) {
  check_servo(c, cmd.servo_deg);
  (void)voltage_level(c, cmd.voltage);
}

/// Arc length reeled onto the extension wheel.
inline double cable_displacement(const ActuatorConfig& c, double servo_deg) {
  check_servo(c, servo_deg);
  return (c.wheel_diameter / 2.0) * deg_to_rad(servo_deg);
}

/// Lateral contraction of `n_active` units folding from theta_neutral to theta.
inline double geometric_contraction(const FoldParams& params, int n_active, double theta) {
  return n_active * 2.0 * params.p *
         (sin_deg(params.theta_neutral / 2.0) - sin_deg(theta / 2.0));
}

namespace detail {

// Calibration segment whose left knot is the last one at or below servo_deg.
// The final knot reuses the slope of the last segment for extrapolation.
struct Segment {
  CalibrationPoint left;
  double slope = 0.0;  // deg theta per deg servo
};

inline double segment_slope(const std::vector<CalibrationPoint>& cal, std::size_t k) {
  if (cal.size() < 2) return 0.0;
  const std::size_t a = std::min(k, cal.size() - 2);
  return (cal[a + 1].theta_deg - cal[a].theta_deg) / (cal[a + 1].servo_deg - cal[a].servo_deg);
}

inline Segment segment_at(const std::vector<CalibrationPoint>& cal, double servo_deg) {
  auto it = std::upper_bound(cal.begin(), cal.end(), servo_deg,
                             [](double s, const CalibrationPoint& k) { return s < k.servo_deg; });
  const std::size_t k = (it == cal.begin()) ? 0 : static_cast<std::size_t>(it - cal.begin()) - 1;
  return {cal[k], segment_slope(cal, k)};
}

inline ThetaEstimate calibrated_theta(const ActuatorConfig& c, double servo_deg) {
  const Segment seg = segment_at(c.calibration, servo_deg);
  double theta = seg.left.theta_deg + seg.slope * (servo_deg - seg.left.servo_deg);
  if (theta > 180.0) return {180.0, true};
  if (theta <= 0.0) return {kMinFoldAngle, true};
  return {theta, false};
}

inline double geometric_theta(const ActuatorConfig& c, const FoldParams& params,
                              double displacement) {
  const double max_contraction =
      c.n_active * 2.0 * params.p * sin_deg(params.theta_neutral / 2.0);
  if (displacement >= max_contraction) {
    throw InfeasibleError("cable displacement " + std::to_string(displacement) +
                          " mm exceeds the maximum contraction " +
                          std::to_string(max_contraction) + " mm");
  }
  if (displacement == 0.0) return params.theta_neutral;

  // contraction(theta) - displacement: positive near 0, <= 0 at theta_neutral
  double lo = 0.0;
  double hi = params.theta_neutral;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (geometric_contraction(params, c.n_active, mid) - displacement > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Fold angle reached at a servo angle. Calibrated mode interpolates the
/// calibration table; geometric mode solves the contraction equation
///   n_active * 2p * (sin(theta_neutral/2) - sin(theta/2)) = cable displacement
/// by bisection on (0, theta_neutral].
inline ThetaEstimate theta_from_servo(const ActuatorConfig& c, const FoldParams& params,
                                      double servo_deg, MappingMode mode) {
  validate(c);
  validate(params);
  check_servo(c, servo_deg);
  if (mode == MappingMode::Calibrated) return detail::calibrated_theta(c, servo_deg);
  return {detail::geometric_theta(c, params, cable_displacement(c, servo_deg)), false};
}

/// Reachable fold-angle interval [lowest, highest] for a mode.
struct ThetaInterval {
  double lowest = 0.0;
  double highest = 0.0;
};

inline ThetaInterval reachable_thetas(const ActuatorConfig& c, const FoldParams& params,
                                      MappingMode mode) {
  validate(c);
  validate(params);
  if (mode == MappingMode::Calibrated) {
    return {detail::calibrated_theta(c, c.servo_max).theta,
            detail::calibrated_theta(c, c.servo_min).theta};
  }
  const double top = detail::geometric_theta(c, params, cable_displacement(c, c.servo_min));
  try {
    return {detail::geometric_theta(c, params, cable_displacement(c, c.servo_max)), top};
  } catch (const InfeasibleError&) {
    return {0.0, top};  // the cable can fold the module completely
  }
}

/// Servo angle that produces fold angle theta.
inline double servo_for_theta(const ActuatorConfig& c, const FoldParams& params, double theta,
                              MappingMode mode) {
  validate(c);
  validate(params);
  validate_theta(theta);
  const ThetaInterval range = reachable_thetas(c, params, mode);
  auto unreachable = [&] {
    return InfeasibleError("fold angle " + std::to_string(theta) +
                           " deg unreachable; reachable interval [" +
                           std::to_string(range.lowest) + ", " + std::to_string(range.highest) +
                           "] deg");
  };

  if (mode == MappingMode::Geometric) {
    if (theta > params.theta_neutral) throw unreachable();
    const double displacement = geometric_contraction(params, c.n_active, theta);
    const double servo = rad_to_deg(displacement / (c.wheel_diameter / 2.0));
    if (servo < c.servo_min || servo > c.servo_max) throw unreachable();
    return servo;
  }

  // clamped extrapolation cannot be inverted
  const auto lo = detail::calibrated_theta(c, c.servo_max);
  const auto hi = detail::calibrated_theta(c, c.servo_min);
  if (theta < range.lowest || theta > range.highest || (lo.clamped && theta == lo.theta) ||
      (hi.clamped && theta == hi.theta)) {
    throw unreachable();
  }
  const auto& cal = c.calibration;
  for (std::size_t k = 0; k < cal.size(); ++k) {
    if (cal[k].theta_deg == theta) return cal[k].servo_deg;
  }
  // theta strictly decreases with servo, so the segment is the one whose left
  // knot is the last knot with theta_deg > theta
  std::size_t k = 0;
  while (k + 1 < cal.size() && cal[k + 1].theta_deg > theta) ++k;
  const double slope = detail::segment_slope(cal, k);
  if (slope == 0.0) throw unreachable();
  return cal[k].servo_deg + (theta - cal[k].theta_deg) / slope;
}

/// Time to travel `delta_servo_deg` at a voltage, assuming constant angular speed.
inline double actuation_time(const ActuatorConfig& c, double delta_servo_deg, double voltage) {
  if (!(delta_servo_deg >= 0.0)) throw DomainError("delta_servo", "must be >= 0");
  const VoltageLevel& v = voltage_level(c, voltage);
  return delta_servo_deg / 180.0 * v.sweep_time_s;
}

/// Servo power at the voltage plus the controller's constant draw.
inline double power_draw(const ActuatorConfig& c, double voltage) {
  const VoltageLevel& v = voltage_level(c, voltage);
  return v.volts * v.servo_current_a + c.controller_power_w;
}

}  // namespace orifold
