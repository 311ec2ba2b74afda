#pragma once

// Testbed simulation: a loaded plate resting on the folded module, read out by
// force sensors at a set of contact locations.
//
// Per servo angle:
//   theta    calibrated fold angle
//   F_l      cable tension, k * max(0, cable displacement - slack)
//   unit     plate weight / #locations + N(F_l, theta) from the force model
//   a        contact-area factor sin(theta/2), 1 when flat
//   force_i  unit * a   (identical for cable-connected and free locations)

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "orifold/actuation.hpp"
#include "orifold/fold_geometry.hpp"
#include "orifold/force_model.hpp"

namespace orifold {

struct ContactLocation {
  int unit = 0;  // row-major unit index, row * n + column
  bool connected = false;

  bool operator==(const ContactLocation&) const = default;
};

// Linear cable take-up after an initial slack.
struct CableTension {
  double stiffness_n_per_mm = 0.2;
  double slack_mm = 10.0;

  bool operator==(const CableTension&) const = default;
};

// Neutral prototype height (22 cos 65 deg = 9.2976 mm) lifted to the
// measured 10 mm.
inline constexpr double kDefaultThicknessOffset = 10.0 - 9.297601758295388;

inline std::vector<ContactLocation> default_contact_locations() {
  // 4 x 3 module; cable paths cover one unit in the first row, two in the
  // second and one in the third. Locations 5-8 sit on free units.
  return {{1, true}, {5, true}, {6, true}, {10, true},
          {0, false}, {3, false}, {8, false}, {11, false}};
}

struct TestbedConfig {
  FoldParams prototype{};
  double plate_mass_kg = 1.0;
  std::vector<ContactLocation> locations = default_contact_locations();
  double thickness_offset_mm = kDefaultThicknessOffset;
  CableTension cable{};
  double mu = 0.0;
  double beam_mass = 0.0;
  double gravity = kStandardGravity;

  bool operator==(const TestbedConfig&) const = default;
};

inline void validate(const TestbedConfig& c) {
  validate(c.prototype);
  if (!(c.plate_mass_kg >= 0.0)) throw DomainError("plate_mass_kg", "must be >= 0");
  if (c.locations.empty()) throw DomainError("contact_locations", "at least one location required");
  const int units = c.prototype.n * c.prototype.m;
  for (const auto& loc : c.locations) {
    if (loc.unit < 0 || loc.unit >= units) {
      throw DomainError("contact_locations", "unit index " + std::to_string(loc.unit) +
                                                 " outside the " + std::to_string(units) +
                                                 "-unit module");
    }
  }
  if (!(c.cable.stiffness_n_per_mm >= 0.0)) throw DomainError("cable_stiffness_n_per_mm", "must be >= 0");
  if (!(c.cable.slack_mm >= 0.0)) throw DomainError("cable_slack_mm", "must be >= 0");
  LoadCase lc;
  lc.mu = c.mu;
  lc.beam_mass = c.beam_mass;
  lc.gravity = c.gravity;
  validate(lc);
}

enum class ContactStatus {
  Ok,
  LiftOff,   // structure pulls away; forces clamped to 0
  Singular,  // force model singular at this fold angle; forces set to 0
};

struct LocationForce {
  int location = 0;  // 1-based sensor number
  int unit = 0;
  bool connected = false;
  double area_factor = 1.0;
  double force = 0.0;  // N
};

struct ContactMap {
  double servo_deg = 0.0;
  double theta = 0.0;
  double height_mm = 0.0;
  double lateral_force = 0.0;   // cable tension, N
  double unit_force = 0.0;      // weight share + actuation force, N
  double actuation_force = 0.0; // force-model N for the cable tension
  bool theta_clamped = false;
  ContactStatus status = ContactStatus::Ok;
  std::vector<LocationForce> locations;

  double total_force() const {
    double sum = 0.0;
    for (const auto& l : locations) sum += l.force;
    return sum;
  }
};

/// Contact-area factor: sin(theta/2), monotone in theta and 1 when flat.
inline double contact_area_factor(double theta) {
  validate_theta(theta);
  return sin_deg(theta / 2.0);
}

inline double cable_tension(const TestbedConfig& c, const ActuatorConfig& actuator,
                            double servo_deg) {
  const double taken_up = cable_displacement(actuator, servo_deg) - c.cable.slack_mm;
  return taken_up > 0.0 ? c.cable.stiffness_n_per_mm * taken_up : 0.0;
}

inline double height_report(const TestbedConfig& c, const ActuatorConfig& actuator,
                            double servo_deg) {
  validate(c);
  const auto est = theta_from_servo(actuator, c.prototype, servo_deg, MappingMode::Calibrated);
  return dimensions(c.prototype, est.theta).h + c.thickness_offset_mm;
}

/// Offset that makes the neutral-state height report equal `measured_neutral_mm`.
inline double calibrate_thickness_offset(const TestbedConfig& c, const ActuatorConfig& actuator,
                                         double measured_neutral_mm) {
  validate(c);
  const auto est =
      theta_from_servo(actuator, c.prototype, actuator.servo_min, MappingMode::Calibrated);
  return measured_neutral_mm - dimensions(c.prototype, est.theta).h;
}

inline ContactMap simulate_contact(const TestbedConfig& c, const ActuatorConfig& actuator,
                                   double servo_deg) {
  const auto est = theta_from_servo(actuator, c.prototype, servo_deg, MappingMode::Calibrated);

  ContactMap map;
  map.servo_deg = servo_deg;
  map.theta = est.theta;
  map.theta_clamped = est.clamped;
  map.height_mm = dimensions(c.prototype, est.theta).h + c.thickness_offset_mm;
  map.lateral_force = cable_tension(c, actuator, servo_deg);

  const double area = contact_area_factor(est.theta);
  const double share =
      c.plate_mass_kg * c.gravity / static_cast<double>(c.locations.size());

  LoadCase lc;
  lc.load_n = share;
  lc.beam_mass = c.beam_mass;
  lc.mu = c.mu;
  lc.lateral_force = map.lateral_force;
  lc.gravity = c.gravity;

  double unit = 0.0;
  try {
    map.actuation_force = vertical_force(lc, c.prototype, est.theta).vertical_force;
    unit = share + map.actuation_force;
    map.unit_force = unit;
    if (unit < 0.0) {
      map.status = ContactStatus::LiftOff;
      unit = 0.0;
    }
  } catch (const SingularityError&) {
    map.status = ContactStatus::Singular;
  }

  map.locations.reserve(c.locations.size());
  for (std::size_t k = 0; k < c.locations.size(); ++k) {
    const auto& loc = c.locations[k];
    map.locations.push_back({static_cast<int>(k + 1), loc.unit, loc.connected, area,
                             map.status == ContactStatus::Singular ? 0.0 : unit * area});
  }
  return map;
}

/// One contact map per servo angle, in input order.
inline std::vector<ContactMap> simulate_testbed(const TestbedConfig& c,
                                                const ActuatorConfig& actuator,
                                                const std::vector<double>& servo_angles) {
  validate(c);
  validate(actuator);
  for (double s : servo_angles) check_servo(actuator, s);

  std::vector<ContactMap> out;
  out.reserve(servo_angles.size());
  for (double s : servo_angles) out.push_back(simulate_contact(c, actuator, s));
  return out;
}

/// Intensity level k in {1, 2, 3, 4} maps to a 40k degree servo command.
inline std::vector<ActuationCommand> intensity_schedule(const std::vector<int>& levels,
                                                        double voltage = 5.0) {
  if (levels.empty()) throw DomainError("levels", "intensity schedule is empty");
  std::vector<ActuationCommand> out;
  out.reserve(levels.size());
  for (int k : levels) {
    if (k < 1 || k > 4) {
      throw DomainError("levels", "unknown intensity level " + std::to_string(k));
    }
    out.push_back({40.0 * k, voltage});
  }
  return out;
}

}  // namespace orifold
