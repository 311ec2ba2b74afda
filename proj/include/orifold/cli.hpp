#pragma once

// Command-line front end. Each subcommand parses flags, calls one library
// operation and hands the result to an emitter.
//
// Exit status: 0 success, 1 domain/config/io error, 2 usage error.
// Diagnostics go to `err` as a single "error: <kind>: <message>" line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orifold/actuation.hpp"
#include "orifold/config.hpp"
#include "orifold/emit.hpp"
#include "orifold/errors.hpp"
#include "orifold/feedback_sim.hpp"
#include "orifold/fold_geometry.hpp"
#include "orifold/force_model.hpp"
#include "orifold/tessellation.hpp"

namespace orifold::cli {

inline constexpr const char* kConfigEnvVar = "ORIFOLD_CONFIG";

inline const std::vector<double>& default_testbed_angles() {
  static const std::vector<double> angles{0.0, 30.0, 60.0, 90.0, 120.0};
  return angles;
}

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Config from an explicit path, else $ORIFOLD_CONFIG, else the prototype defaults.
inline SystemConfig resolve_config(const std::string& path) {
  std::string chosen = path;
  if (chosen.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr) chosen = env;
  }
  if (chosen.empty()) return load_config("{}");
  return load_config(read_file(chosen));
}

/// Full report: config echo, beta sweep, neutral-state force, default testbed
/// run, full-sweep latency and power at every voltage, neutral vs 160 deg height.
inline ReportInputs build_report(const SystemConfig& cfg) {
  ReportInputs in;
  in.config = cfg;
  in.sweep = sweep(cfg.fold, 90.0, 180.0, 1.0, {45.0, 60.0, 70.0});
  in.force = ForceReport{cfg.fold.theta_neutral, cfg.load_case,
                         vertical_force(cfg.load_case, cfg.fold, cfg.fold.theta_neutral)};
  in.testbed = simulate_testbed(cfg.testbed, cfg.actuator, default_testbed_angles());
  for (const auto& v : cfg.actuator.voltages) {
    in.latency.push_back({180.0, v.volts, actuation_time(cfg.actuator, 180.0, v.volts)});
    in.power.push_back({v.volts, power_draw(cfg.actuator, v.volts)});
  }
  const double actuated = std::min(160.0, cfg.actuator.servo_max);
  in.height = HeightReport{actuated, height_report(cfg.testbed, cfg.actuator, cfg.actuator.servo_min),
                           height_report(cfg.testbed, cfg.actuator, actuated)};
  return in;
}

inline std::optional<MappingMode> parse_mode(const std::string& s) {
  if (s == "calibrated") return MappingMode::Calibrated;
  if (s == "geometric") return MappingMode::Geometric;
  return std::nullopt;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Miura-Ori tactile surface kinematics, force and actuation toolkit", "orifold"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // -c may also follow the subcommand

  std::string config_path;
  std::string output_path;
  app.add_option("-c,--config", config_path,
                 std::string("JSON configuration (fallback: $") + kConfigEnvVar + ")");

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output_path, "output file (default: stdout)");
  };

  double theta = 0.0;
  auto* dims = app.add_subcommand("dims", "dimensions at one fold angle");
  dims->add_option("--theta", theta, "fold angle (deg)")->required();
  add_output(dims);

  double theta_min = 90.0, theta_max = 180.0, step = 1.0;
  std::vector<double> betas{45.0, 60.0, 70.0};
  auto* sweep_cmd = app.add_subcommand("sweep", "dimension table over fold and sector angles");
  sweep_cmd->add_option("--theta-min", theta_min, "lowest fold angle (deg)")->capture_default_str();
  sweep_cmd->add_option("--theta-max", theta_max, "highest fold angle (deg)")->capture_default_str();
  sweep_cmd->add_option("--step", step, "fold angle step (deg)")->capture_default_str();
  sweep_cmd->add_option("--betas", betas, "comma-separated sector angles (deg)")
      ->delimiter(',')
      ->capture_default_str();
  add_output(sweep_cmd);

  std::optional<double> fl, mu, mass, load;
  auto* force = app.add_subcommand("force", "vertical force from lateral cable force");
  force->add_option("--theta", theta, "fold angle (deg)")->required();
  force->add_option("--fl", fl, "lateral cable force (N)");
  force->add_option("--mu", mu, "base friction coefficient");
  force->add_option("--mass", mass, "beam mass (kg)");
  force->add_option("--load", load, "external load on the beam (N)");
  add_output(force);

  double servo = 0.0;
  std::string mode_text = "calibrated";
  std::optional<double> voltage;
  auto* actuate = app.add_subcommand("actuate", "fold angle, latency and power for a servo angle");
  actuate->add_option("--servo", servo, "servo angle (deg)")->required();
  actuate->add_option("--mode", mode_text, "calibrated | geometric")->capture_default_str();
  actuate->add_option("--voltage", voltage, "supply voltage (V, default: reference)");
  add_output(actuate);

  std::vector<double> angles = default_testbed_angles();
  auto* testbed = app.add_subcommand("testbed", "simulated contact forces per sensor location");
  testbed->add_option("--angles", angles, "comma-separated servo angles (deg)")
      ->delimiter(',')
      ->capture_default_str();
  add_output(testbed);

  std::optional<double> mesh_theta;
  auto* mesh = app.add_subcommand("mesh", "folded quad mesh as OBJ");
  mesh->add_option("--theta", mesh_theta, "fold angle (deg, default: neutral)");
  add_output(mesh);

  auto* crease = app.add_subcommand("crease", "flat crease pattern as SVG");
  add_output(crease);

  std::vector<int> levels;
  auto* schedule = app.add_subcommand("schedule", "servo commands for intensity levels 1-4");
  schedule->add_option("--levels", levels, "comma-separated levels")->delimiter(',')->required();
  add_output(schedule);

  auto* report = app.add_subcommand("report", "plain-text experiment report");
  add_output(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }

  std::optional<MappingMode> mode;
  if (actuate->parsed()) {
    mode = parse_mode(mode_text);
    if (!mode) {
      err << "error: usage: --mode must be calibrated or geometric\n";
      return 2;
    }
  }

  try {
    const SystemConfig cfg = resolve_config(config_path);
    std::string text;

    if (dims->parsed()) {
      text = write_dimensions_csv(theta, dimensions(cfg.fold, theta));
    } else if (sweep_cmd->parsed()) {
      text = write_sweep_csv(sweep(cfg.fold, theta_min, theta_max, step, betas));
    } else if (force->parsed()) {
      LoadCase lc = cfg.load_case;
      if (fl) lc.lateral_force = *fl;
      if (mu) lc.mu = *mu;
      if (mass) lc.beam_mass = *mass;
      if (load) lc.load_n = *load;
      text = write_force_csv(theta, lc, vertical_force(lc, cfg.fold, theta));
    } else if (actuate->parsed()) {
      const double v = voltage.value_or(cfg.actuator.reference_voltage());
      text = write_actuation_csv(evaluate_actuation(cfg.actuator, cfg.fold, servo, *mode, v));
    } else if (testbed->parsed()) {
      text = write_testbed_csv(simulate_testbed(cfg.testbed, cfg.actuator, angles));
    } else if (mesh->parsed()) {
      text = write_mesh_obj(folded_mesh(cfg.fold, mesh_theta.value_or(cfg.fold.theta_neutral)));
    } else if (crease->parsed()) {
      text = write_crease_svg(crease_pattern(cfg.fold));
    } else if (schedule->parsed()) {
      text = "level,servo_deg,voltage_v\n";
      const auto cmds = intensity_schedule(levels, cfg.actuator.reference_voltage());
      for (std::size_t k = 0; k < cmds.size(); ++k) {
        text += std::to_string(levels[k]) + "," + format_sig6(cmds[k].servo_deg) + "," +
                format_sig6(cmds[k].voltage) + "\n";
      }
    } else if (report->parsed()) {
      text = write_report(build_report(cfg));
    }

    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw IoError("cannot write " + output_path);
      file << text;
      if (!file) throw IoError("failed writing " + output_path);
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "error: io: " << e.what() << "\n";
  } catch (const SingularityError& e) {
    err << "error: singular: " << e.what() << "\n";
  } catch (const InfeasibleError& e) {
    err << "error: infeasible: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: domain: " << e.what() << "\n";
  }
  return 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("orifold");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace orifold::cli
