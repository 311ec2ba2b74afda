#pragma once

// JSON system configuration, schema version 1. Every key is optional and
// defaults to the 3 x 4 prototype; unknown keys are rejected.
//
// {
//   "schema_version": 1,
//   "fold":      {"p", "beta", "n", "m", "theta_neutral"},
//   "actuator":  {"wheel_diameter", "servo_range": [min, max],
//                 "voltages": [{"volts", "sweep_time_s", "servo_current_a"}],
//                 "controller_power_w",
//                 "calibration": [{"servo_deg", "theta_deg"}], "n_active"},
//   "testbed":   {"plate_mass_kg", "thickness_offset_mm",
//                 "cable": {"stiffness_n_per_mm", "slack_mm"},
//                 "contact_locations": [{"unit", "connected"}]},
//   "load_case": {"load_n", "beam_mass", "mu", "lateral_force", "gravity"}
// }
//
// Angles in degrees, lengths in mm, masses in kg, forces in N.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"
#include "orifold/actuation.hpp"
#include "orifold/errors.hpp"
#include "orifold/feedback_sim.hpp"
#include "orifold/fold_geometry.hpp"
#include "orifold/force_model.hpp"

namespace orifold {

inline constexpr int kConfigSchemaVersion = 1;

struct SystemConfig {
  FoldParams fold{};
  ActuatorConfig actuator{};
  // prototype, mu, beam_mass and gravity mirror `fold` and `load_case`
  TestbedConfig testbed{};
  LoadCase load_case{};

  bool operator==(const SystemConfig&) const = default;
};

namespace detail {

using json = nlohmann::ordered_json;

inline std::string join_path(std::string_view parent, std::string_view key) {
  return parent.empty() ? std::string(key) : std::string(parent) + "." + std::string(key);
}

inline void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    throw ConfigError(ConfigError::Kind::Schema, path, "schema: " + path + ": expected an object");
  }
}

inline void reject_unknown(const json& obj, const std::string& path,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      const std::string field = join_path(path, key);
      throw ConfigError(ConfigError::Kind::Schema, field, "schema: " + field + ": unknown key");
    }
  }
}

inline void read_number(const json& obj, const std::string& path, const char* key, double& out) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_number()) {
    const std::string field = join_path(path, key);
    throw ConfigError(ConfigError::Kind::Schema, field, "schema: " + field + ": expected a number");
  }
  out = v.get<double>();
}

inline void read_int(const json& obj, const std::string& path, const char* key, int& out) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    const std::string field = join_path(path, key);
    throw ConfigError(ConfigError::Kind::Schema, field, "schema: " + field + ": expected an integer");
  }
  out = v.get<int>();
}

inline void read_bool(const json& obj, const std::string& path, const char* key, bool& out) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_boolean()) {
    const std::string field = join_path(path, key);
    throw ConfigError(ConfigError::Kind::Schema, field, "schema: " + field + ": expected a boolean");
  }
  out = v.get<bool>();
}

inline const json* child_array(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) return nullptr;
  const json& v = obj.at(key);
  if (!v.is_array()) {
    const std::string field = join_path(path, key);
    throw ConfigError(ConfigError::Kind::Schema, field, "schema: " + field + ": expected an array");
  }
  return &v;
}

// Runs a validator and re-raises its DomainError as an invariant violation
// under `section`.
template <typename Fn>
void check_invariants(const std::string& section, Fn&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    const std::string field = join_path(section, e.parameter());
    throw ConfigError(ConfigError::Kind::Invariant, field,
                      "invariant: " + section + "." + std::string(e.what()));
  }
}

inline FoldParams parse_fold(const json& j) {
  const std::string path = "fold";
  expect_object(j, path);
  reject_unknown(j, path, {"p", "beta", "n", "m", "theta_neutral"});
  FoldParams f;
  read_number(j, path, "p", f.p);
  read_number(j, path, "beta", f.beta);
  read_int(j, path, "n", f.n);
  read_int(j, path, "m", f.m);
  read_number(j, path, "theta_neutral", f.theta_neutral);
  check_invariants(path, [&] { validate(f); });
  return f;
}

inline ActuatorConfig parse_actuator(const json& j) {
  const std::string path = "actuator";
  expect_object(j, path);
  reject_unknown(j, path, {"wheel_diameter", "servo_range", "voltages", "controller_power_w",
                           "calibration", "n_active"});
  ActuatorConfig a;
  read_number(j, path, "wheel_diameter", a.wheel_diameter);
  if (const json* range = child_array(j, path, "servo_range")) {
    if (range->size() != 2 || !(*range)[0].is_number() || !(*range)[1].is_number()) {
      throw ConfigError(ConfigError::Kind::Schema, "actuator.servo_range",
                        "schema: actuator.servo_range: expected [min, max]");
    }
    a.servo_min = (*range)[0].get<double>();
    a.servo_max = (*range)[1].get<double>();
  }
  if (const json* volts = child_array(j, path, "voltages")) {
    a.voltages.clear();
    for (std::size_t k = 0; k < volts->size(); ++k) {
      const std::string item = path + ".voltages[" + std::to_string(k) + "]";
      const json& v = (*volts)[k];
      expect_object(v, item);
      reject_unknown(v, item, {"volts", "sweep_time_s", "servo_current_a"});
      VoltageLevel level;
      read_number(v, item, "volts", level.volts);
      read_number(v, item, "sweep_time_s", level.sweep_time_s);
      read_number(v, item, "servo_current_a", level.servo_current_a);
      a.voltages.push_back(level);
    }
  }
  read_number(j, path, "controller_power_w", a.controller_power_w);
  if (const json* cal = child_array(j, path, "calibration")) {
    a.calibration.clear();
    for (std::size_t k = 0; k < cal->size(); ++k) {
      const std::string item = path + ".calibration[" + std::to_string(k) + "]";
      const json& v = (*cal)[k];
      expect_object(v, item);
      reject_unknown(v, item, {"servo_deg", "theta_deg"});
      CalibrationPoint pt;
      read_number(v, item, "servo_deg", pt.servo_deg);
      read_number(v, item, "theta_deg", pt.theta_deg);
      a.calibration.push_back(pt);
    }
  }
  read_int(j, path, "n_active", a.n_active);
  check_invariants(path, [&] { validate(a); });
  return a;
}

inline LoadCase parse_load_case(const json& j) {
  const std::string path = "load_case";
  expect_object(j, path);
  reject_unknown(j, path, {"load_n", "beam_mass", "mu", "lateral_force", "gravity"});
  LoadCase c;
  read_number(j, path, "load_n", c.load_n);
  read_number(j, path, "beam_mass", c.beam_mass);
  read_number(j, path, "mu", c.mu);
  read_number(j, path, "lateral_force", c.lateral_force);
  read_number(j, path, "gravity", c.gravity);
  check_invariants(path, [&] { validate(c); });
  return c;
}

inline void parse_testbed(const json& j, TestbedConfig& t) {
  const std::string path = "testbed";
  expect_object(j, path);
  reject_unknown(j, path, {"plate_mass_kg", "thickness_offset_mm", "cable", "contact_locations"});
  read_number(j, path, "plate_mass_kg", t.plate_mass_kg);
  read_number(j, path, "thickness_offset_mm", t.thickness_offset_mm);
  if (j.contains("cable")) {
    const std::string cpath = path + ".cable";
    const json& c = j.at("cable");
    expect_object(c, cpath);
    reject_unknown(c, cpath, {"stiffness_n_per_mm", "slack_mm"});
    read_number(c, cpath, "stiffness_n_per_mm", t.cable.stiffness_n_per_mm);
    read_number(c, cpath, "slack_mm", t.cable.slack_mm);
  }
  if (const json* locs = child_array(j, path, "contact_locations")) {
    t.locations.clear();
    for (std::size_t k = 0; k < locs->size(); ++k) {
      const std::string item = path + ".contact_locations[" + std::to_string(k) + "]";
      const json& v = (*locs)[k];
      expect_object(v, item);
      reject_unknown(v, item, {"unit", "connected"});
      ContactLocation loc;
      read_int(v, item, "unit", loc.unit);
      read_bool(v, item, "connected", loc.connected);
      t.locations.push_back(loc);
    }
  }
}

inline std::string describe_position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace detail

/// Parses and validates a configuration document. Omitted fields keep the
/// prototype defaults.
inline SystemConfig load_config(std::string_view text) {
  detail::json doc;
  try {
    doc = detail::json::parse(text.begin(), text.end());
  } catch (const detail::json::parse_error& e) {
    throw ConfigError(ConfigError::Kind::Parse, "",
                      "parse: " + detail::describe_position(text, e.byte) + ": " + e.what());
  }
  detail::expect_object(doc, "");
  detail::reject_unknown(doc, "",
                         {"schema_version", "fold", "actuator", "testbed", "load_case"});

  int version = kConfigSchemaVersion;
  detail::read_int(doc, "", "schema_version", version);
  if (version != kConfigSchemaVersion) {
    throw ConfigError(ConfigError::Kind::Schema, "schema_version",
                      "schema: schema_version: unsupported version " + std::to_string(version));
  }

  SystemConfig cfg;
  if (doc.contains("fold")) cfg.fold = detail::parse_fold(doc.at("fold"));
  if (doc.contains("actuator")) cfg.actuator = detail::parse_actuator(doc.at("actuator"));
  if (doc.contains("load_case")) cfg.load_case = detail::parse_load_case(doc.at("load_case"));
  if (doc.contains("testbed")) detail::parse_testbed(doc.at("testbed"), cfg.testbed);

  cfg.testbed.prototype = cfg.fold;
  cfg.testbed.mu = cfg.load_case.mu;
  cfg.testbed.beam_mass = cfg.load_case.beam_mass;
  cfg.testbed.gravity = cfg.load_case.gravity;
  detail::check_invariants("testbed", [&] { validate(cfg.testbed); });
  return cfg;
}

/// Canonical JSON for a configuration; load_config(serialize_config(c)) == c.
inline std::string serialize_config(const SystemConfig& cfg) {
  using detail::json;
  json doc;
  doc["schema_version"] = kConfigSchemaVersion;
  doc["fold"] = {{"p", cfg.fold.p},
                 {"beta", cfg.fold.beta},
                 {"n", cfg.fold.n},
                 {"m", cfg.fold.m},
                 {"theta_neutral", cfg.fold.theta_neutral}};

  const ActuatorConfig& a = cfg.actuator;
  json volts = json::array();
  for (const auto& v : a.voltages) {
    volts.push_back(
        {{"volts", v.volts}, {"sweep_time_s", v.sweep_time_s}, {"servo_current_a", v.servo_current_a}});
  }
  json cal = json::array();
  for (const auto& k : a.calibration) {
    cal.push_back({{"servo_deg", k.servo_deg}, {"theta_deg", k.theta_deg}});
  }
  doc["actuator"] = {{"wheel_diameter", a.wheel_diameter},
                     {"servo_range", json::array({a.servo_min, a.servo_max})},
                     {"voltages", volts},
                     {"controller_power_w", a.controller_power_w},
                     {"calibration", cal},
                     {"n_active", a.n_active}};

  const TestbedConfig& t = cfg.testbed;
  json locs = json::array();
  for (const auto& l : t.locations) locs.push_back({{"unit", l.unit}, {"connected", l.connected}});
  doc["testbed"] = {{"plate_mass_kg", t.plate_mass_kg},
                    {"thickness_offset_mm", t.thickness_offset_mm},
                    {"cable",
                     {{"stiffness_n_per_mm", t.cable.stiffness_n_per_mm},
                      {"slack_mm", t.cable.slack_mm}}},
                    {"contact_locations", locs}};

  const LoadCase& c = cfg.load_case;
  doc["load_case"] = {{"load_n", c.load_n},
                      {"beam_mass", c.beam_mass},
                      {"mu", c.mu},
                      {"lateral_force", c.lateral_force},
                      {"gravity", c.gravity}};
  return doc.dump(2) + "\n";
}

}  // namespace orifold
