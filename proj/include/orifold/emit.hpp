#pragma once

// Text emitters: CSV tables, OBJ meshes, SVG crease patterns and the plain
// text experiment report. All output is deterministic for identical input.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "orifold/actuation.hpp"
#include "orifold/config.hpp"
#include "orifold/feedback_sim.hpp"
#include "orifold/fold_geometry.hpp"
#include "orifold/force_model.hpp"
#include "orifold/tessellation.hpp"

namespace orifold {

namespace detail {

template <typename... Args>
std::string printf_string(const char* fmt, Args... args) {
  const int len = std::snprintf(nullptr, 0, fmt, args...);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  std::snprintf(out.data(), out.size(), fmt, args...);
  out.resize(static_cast<std::size_t>(len));
  return out;
}

}  // namespace detail

/// Fixed-point text with 6 significant digits. Magnitudes below 1e-9 print
/// as "0.00000".
inline std::string format_sig6(double v) {
  if (std::abs(v) < 1e-9) return "0.00000";
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int decimals = std::clamp(5 - exponent, 0, 15);
  return detail::printf_string("%.*f", decimals, v);
}

inline std::string write_sweep_csv(const DimensionTable& table) {
  std::string out = "beta_deg,theta_deg,h_mm,l_mm,w_mm\n";
  for (const auto& r : table) {
    out += format_sig6(r.beta) + "," + format_sig6(r.theta) + "," + format_sig6(r.h) + "," +
           format_sig6(r.l) + "," + format_sig6(r.w) + "\n";
  }
  return out;
}

inline std::string write_dimensions_csv(double theta, const Dimensions& d) {
  return "theta_deg,phi_deg,h_mm,l_mm,w_mm\n" + format_sig6(theta) + "," + format_sig6(d.phi) +
         "," + format_sig6(d.h) + "," + format_sig6(d.l) + "," + format_sig6(d.w) + "\n";
}

inline std::string write_force_csv(double theta, const LoadCase& c, const EquilibriumResult& r) {
  return "theta_deg,fl_n,mu,mass_kg,load_n,n_newton,r_a_n,r_b_n,f_a_n,supports_load\n" +
         format_sig6(theta) + "," + format_sig6(c.lateral_force) + "," + format_sig6(c.mu) + "," +
         format_sig6(c.beam_mass) + "," + format_sig6(c.load_n) + "," +
         format_sig6(r.vertical_force) + "," + format_sig6(r.r_a) + "," + format_sig6(r.r_b) +
         "," + format_sig6(r.f_a) + "," + (r.supports_load ? "yes" : "no") + "\n";
}

struct ActuationReport {
  double servo_deg = 0.0;
  MappingMode mode = MappingMode::Calibrated;
  double voltage = 5.0;
  ThetaEstimate theta{};
  double cable_mm = 0.0;
  double time_s = 0.0;
  double power_w = 0.0;
};

inline ActuationReport evaluate_actuation(const ActuatorConfig& c, const FoldParams& params,
                                          double servo_deg, MappingMode mode, double voltage) {
  ActuationReport r;
  r.servo_deg = servo_deg;
  r.mode = mode;
  r.voltage = voltage;
  r.theta = theta_from_servo(c, params, servo_deg, mode);
  r.cable_mm = cable_displacement(c, servo_deg);
  r.time_s = actuation_time(c, servo_deg - c.servo_min, voltage);
  r.power_w = power_draw(c, voltage);
  return r;
}

inline const char* mode_name(MappingMode mode) {
  return mode == MappingMode::Calibrated ? "calibrated" : "geometric";
}

inline std::string write_actuation_csv(const ActuationReport& r) {
  return "servo_deg,mode,voltage_v,theta_deg,cable_mm,time_s,power_w,clamped\n" +
         format_sig6(r.servo_deg) + "," + mode_name(r.mode) + "," + format_sig6(r.voltage) + "," +
         format_sig6(r.theta.theta) + "," + format_sig6(r.cable_mm) + "," + format_sig6(r.time_s) +
         "," + format_sig6(r.power_w) + "," + (r.theta.clamped ? "yes" : "no") + "\n";
}

inline const char* status_name(ContactStatus s) {
  switch (s) {
    case ContactStatus::Ok: return "ok";
    case ContactStatus::LiftOff: return "lift_off";
    default: return "singular";
  }
}

inline std::string write_testbed_csv(const std::vector<ContactMap>& maps) {
  std::string out =
      "servo_deg,theta_deg,location,unit,connected,area_factor,force_n,height_mm,status\n";
  for (const auto& m : maps) {
    for (const auto& l : m.locations) {
      out += format_sig6(m.servo_deg) + "," + format_sig6(m.theta) + "," +
             std::to_string(l.location) + "," + std::to_string(l.unit) + "," +
             (l.connected ? "yes" : "no") + "," + format_sig6(l.area_factor) + "," +
             format_sig6(l.force) + "," + format_sig6(m.height_mm) + "," + status_name(m.status) +
             "\n";
    }
  }
  return out;
}

/// Wavefront OBJ with v and f records only, 1-based indices.
inline std::string write_mesh_obj(const Mesh& mesh) {
  std::string out = "# orifold folded Miura-Ori mesh\n# units: mm\n";
  out += detail::printf_string("# vertices: %zu faces: %zu\n", mesh.vertices.size(),
                               mesh.quads.size());
  for (const auto& v : mesh.vertices) {
    out += detail::printf_string("v %.12g %.12g %.12g\n", v.x, v.y, v.z);
  }
  for (const auto& q : mesh.quads) {
    out += detail::printf_string("f %zu %zu %zu %zu\n", q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1);
  }
  return out;
}

/// SVG 1.1 drawing in mm: facet outlines, mountain creases solid, valley
/// creases dashed, cable holes as circles.
inline std::string write_crease_svg(const CreasePattern& cp) {
  auto num = [](double v) { return detail::printf_string("%.4f", v); };
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- orifold crease pattern; units: mm; mountain solid, valley dashed, "
         "holes as circles -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(cp.length) +
         "mm\" height=\"" + num(cp.width) + "mm\" viewBox=\"0 0 " + num(cp.length) + " " +
         num(cp.width) + "\">\n";

  out += "<g id=\"facets\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.2\">\n";
  for (const auto& f : cp.facets) {
    out += "<path d=\"M";
    for (std::size_t k = 0; k < f.size(); ++k) {
      const Vec2& v = cp.vertices[f[k]];
      out += (k == 0 ? " " : " L ") + num(v.x) + " " + num(v.y);
    }
    out += " Z\"/>\n";
  }
  out += "</g>\n";

  auto lines = [&](CreaseKind kind) {
    std::string g;
    for (const auto& c : cp.creases) {
      if (c.kind != kind) continue;
      const Vec2& a = cp.vertices[c.a];
      const Vec2& b = cp.vertices[c.b];
      g += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
           "\" y2=\"" + num(b.y) + "\"/>\n";
    }
    return g;
  };
  out += "<g id=\"mountain\" stroke=\"#d62728\" stroke-width=\"0.4\">\n" +
         lines(CreaseKind::Mountain) + "</g>\n";
  out += "<g id=\"valley\" stroke=\"#1f77b4\" stroke-width=\"0.4\" stroke-dasharray=\"2,1\">\n" +
         lines(CreaseKind::Valley) + "</g>\n";

  out += "<g id=\"holes\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.1\">\n";
  for (const auto& h : cp.holes) {
    out += "<circle cx=\"" + num(h.center.x) + "\" cy=\"" + num(h.center.y) + "\" r=\"" +
           num(h.diameter / 2.0) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

// Measured prototype figures the report compares against.
struct ReferenceFigures {
  double power_5v_w = 9.625;
  double power_8v4_w = 23.645;
  double sweep_5v_s = 0.48;
  double sweep_8v4_s = 0.39;
  double height_change_mm = 12.0;
};

struct ForceReport {
  double theta = 0.0;
  LoadCase load{};
  EquilibriumResult result{};
};

struct PowerReport {
  double voltage = 0.0;
  double watts = 0.0;
};

struct LatencyReport {
  double delta_servo_deg = 0.0;
  double voltage = 0.0;
  double seconds = 0.0;
};

struct HeightReport {
  double servo_deg = 0.0;
  double neutral_mm = 0.0;
  double actuated_mm = 0.0;
};

struct ReportInputs {
  std::optional<SystemConfig> config;
  std::optional<DimensionTable> sweep;
  std::optional<ForceReport> force;
  std::optional<std::vector<ContactMap>> testbed;
  std::vector<LatencyReport> latency;
  std::vector<PowerReport> power;
  std::optional<HeightReport> height;
};

namespace detail {

inline std::string deviation(double simulated, double reference) {
  return printf_string("%+.2f%%", 100.0 * (simulated - reference) / reference);
}

inline std::optional<double> reference_power(double voltage, const ReferenceFigures& ref) {
  if (std::abs(voltage - 5.0) < 1e-9) return ref.power_5v_w;
  if (std::abs(voltage - 8.4) < 1e-9) return ref.power_8v4_w;
  return std::nullopt;
}

inline std::optional<double> reference_sweep(double voltage, const ReferenceFigures& ref) {
  if (std::abs(voltage - 5.0) < 1e-9) return ref.sweep_5v_s;
  if (std::abs(voltage - 8.4) < 1e-9) return ref.sweep_8v4_s;
  return std::nullopt;
}

}  // namespace detail

inline std::string write_report(const ReportInputs& in, const ReferenceFigures& ref = {}) {
  using detail::printf_string;
  std::string out = "orifold experiment report\n";
  out += "units: lengths mm, angles deg, forces N, time s, power W\n";

  if (in.config) {
    out += "\n[config]\n";
    const std::string json = serialize_config(*in.config);
    std::size_t start = 0;
    while (start < json.size()) {
      const std::size_t end = json.find('\n', start);
      out += "  " + json.substr(start, end - start) + "\n";
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }

  if (in.sweep) {
    out += "\n[sweep]\n";
    out += printf_string("rows: %zu\n", in.sweep->size());
    out += write_sweep_csv(*in.sweep);
  }

  if (in.force) {
    const auto& f = *in.force;
    out += "\n[force]\n";
    out += printf_string("theta %.3f deg, F_l %.4f N, mu %.4f, beam mass %.4f kg\n", f.theta,
                         f.load.lateral_force, f.load.mu, f.load.beam_mass);
    out += printf_string("N %.6f N, R_a %.6f N, R_b %.6f N, F_a %.6f N%s\n",
                         f.result.vertical_force, f.result.r_a, f.result.r_b, f.result.f_a,
                         f.result.supports_load ? "" : " (cannot supply upward force)");
  }

  if (in.testbed) {
    out += "\n[testbed]\n";
    for (const auto& m : *in.testbed) {
      for (const auto& l : m.locations) {
        out += printf_string(
            "servo %.1f deg theta %.2f deg location %d unit %d %s area %.4f force %.4f N "
            "status %s\n",
            m.servo_deg, m.theta, l.location, l.unit, l.connected ? "connected" : "free",
            l.area_factor, l.force, status_name(m.status));
      }
    }
  }

  if (!in.latency.empty()) {
    out += "\n[latency]\n";
    for (const auto& l : in.latency) {
      out += printf_string("%.1f deg at %.1f V: %.3f s", l.delta_servo_deg, l.voltage, l.seconds);
      const auto r = detail::reference_sweep(l.voltage, ref);
      if (r && std::abs(l.delta_servo_deg - 180.0) < 1e-9) {
        out += printf_string(" (reference %.3f s, deviation %s)", *r,
                             detail::deviation(l.seconds, *r).c_str());
      }
      out += "\n";
    }
  }

  if (!in.power.empty()) {
    out += "\n[power]\n";
    for (const auto& p : in.power) {
      out += printf_string("%.1f V: %.3f W", p.voltage, p.watts);
      if (const auto r = detail::reference_power(p.voltage, ref)) {
        out += printf_string(" (reference %.3f W, deviation %s)", *r,
                             detail::deviation(p.watts, *r).c_str());
      }
      out += "\n";
    }
  }

  if (in.height) {
    const auto& h = *in.height;
    const double change = h.actuated_mm - h.neutral_mm;
    out += "\n[height]\n";
    out += printf_string("neutral %.3f mm, servo %.1f deg %.3f mm, change %.3f mm "
                         "(reference %.3f mm, deviation %s)\n",
                         h.neutral_mm, h.servo_deg, h.actuated_mm, change, ref.height_change_mm,
                         detail::deviation(change, ref.height_change_mm).c_str());
  }
  return out;
}

}  // namespace orifold
