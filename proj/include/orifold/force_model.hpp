#pragma once

// Static equilibrium of one half of the folded section, modelled as a rigid
// beam of length p leaning at theta/2 from the vertical: base on a rough floor
// (normal R_a, friction F_a = mu R_a), top on a frictionless wall (R_b),
// lateral cable force F_l at the beam centre, beam weight mg at its centre and
// a vertical load N on top.
//
//   sum F_x = F_a + F_l - R_b             = 0
//   sum F_y = R_a - mg - N                 = 0
//   sum M   = F_l h/2 + mg q/2 - R_b h + N q = 0,  h = p cos(theta/2), q = p sin(theta/2)
//
// Solving for N gives the vertical (tactile) force the structure supplies.

#include <cmath>
#include <string>

#include "orifold/angles.hpp"
#include "orifold/errors.hpp"
#include "orifold/fold_geometry.hpp"

namespace orifold {

inline constexpr double kStandardGravity = 9.81;
inline constexpr double kDefaultSingularityTolerance = 1e-9;

struct LoadCase {
  double load_n = 0.0;         // external vertical load (N)
  double beam_mass = 0.0;      // kg
  double mu = 0.0;             // base friction coefficient
  double lateral_force = 0.0;  // F_l (N)
  double gravity = kStandardGravity;

  bool operator==(const LoadCase&) const = default;
};

inline void validate(const LoadCase& c) {
  if (!(c.beam_mass >= 0.0)) throw DomainError("beam_mass", "must be >= 0");
  if (!(c.mu >= 0.0)) throw DomainError("mu", "must be >= 0");
  if (!(c.gravity > 0.0)) throw DomainError("gravity", "must be > 0");
  if (!(c.lateral_force >= 0.0)) throw DomainError("lateral_force", "must be >= 0");
  if (!(c.load_n >= 0.0)) throw DomainError("load_n", "must be >= 0");
}

struct EquilibriumResult {
  double vertical_force = 0.0;  // N, the counterbalance force
  double r_a = 0.0;             // base normal reaction
  double r_b = 0.0;             // wall reaction
  double f_a = 0.0;             // base friction
  double h = 0.0;               // mm
  double q = 0.0;               // mm
  // false when N < 0: the structure cannot push up in this configuration
  bool supports_load = true;
};

struct Residuals {
  double f_x = 0.0;     // N
  double f_y = 0.0;     // N
  double moment = 0.0;  // N mm
};

/// Fold angle at which tan(theta/2) == mu and the solution diverges.
inline double critical_angle(double mu) { return 2.0 * atan_deg(mu); }

namespace detail {

inline double denominator(double mu, double theta) {
  return mu * cos_deg(theta / 2.0) - sin_deg(theta / 2.0);
}

inline void check_singularity(double mu, double theta, double tolerance) {
  if (std::abs(denominator(mu, theta)) <= tolerance) {
    const double crit = critical_angle(mu);
    throw SingularityError(crit, "equilibrium is singular near theta* = " +
                                     std::to_string(crit) + " deg (tan(theta/2) = mu)");
  }
}

}  // namespace detail

/// Evaluates the three balance equations for explicit N, R_a and R_b.
inline Residuals equilibrium_residuals(const LoadCase& c, const FoldParams& params,
                                       double theta, double n, double r_a, double r_b) {
  const double h = params.p * cos_deg(theta / 2.0);
  const double q = params.p * sin_deg(theta / 2.0);
  const double mg = c.beam_mass * c.gravity;
  const double f_a = c.mu * r_a;
  return {f_a + c.lateral_force - r_b,
          r_a - mg - n,
          c.lateral_force * (h / 2.0) + mg * (q / 2.0) - r_b * h + n * q};
}

/// Residuals at a candidate N, with R_a and R_b recovered from the force
/// balances; any imbalance therefore shows up in the moment.
inline Residuals equilibrium_residuals(const LoadCase& c, const FoldParams& params,
                                       double theta, double candidate_n) {
  const double mg = c.beam_mass * c.gravity;
  const double r_a = mg + candidate_n;
  const double r_b = c.mu * r_a + c.lateral_force;
  return equilibrium_residuals(c, params, theta, candidate_n, r_a, r_b);
}

inline EquilibriumResult vertical_force(const LoadCase& c, const FoldParams& params,
                                        double theta,
                                        double singularity_tolerance = kDefaultSingularityTolerance) {
  validate(c);
  validate(params);
  validate_theta(theta);
  detail::check_singularity(c.mu, theta, singularity_tolerance);

  const double s = sin_deg(theta / 2.0);
  const double co = cos_deg(theta / 2.0);
  const double mg = c.beam_mass * c.gravity;

  EquilibriumResult r;
  r.vertical_force =
      (mg / 2.0 * s - c.mu * mg * co - c.lateral_force / 2.0 * co) / (c.mu * co - s);
  r.r_a = mg + r.vertical_force;
  r.f_a = c.mu * r.r_a;
  r.r_b = r.f_a + c.lateral_force;
  r.h = params.p * co;
  r.q = params.p * s;
  r.supports_load = r.vertical_force >= 0.0;
  return r;
}

/// Cable force that makes the structure supply `target_n` at theta.
/// `c.lateral_force` is ignored.
inline double lateral_force_for_target(const LoadCase& c, double theta, double target_n,
                                       double singularity_tolerance = kDefaultSingularityTolerance) {
  LoadCase base = c;
  base.lateral_force = 0.0;
  validate(base);
  validate_theta(theta);
  if (!(target_n >= 0.0)) throw DomainError("target_n", "target force must be >= 0");
  detail::check_singularity(c.mu, theta, singularity_tolerance);

  const double s = sin_deg(theta / 2.0);
  const double co = cos_deg(theta / 2.0);
  if (co == 0.0) {
    throw InfeasibleError("lateral force has no vertical effect in the flat state");
  }
  const double mg = c.beam_mass * c.gravity;
  // N (s - mu c) = F_l c/2 - mg s/2 + mu mg c
  const double fl = 2.0 * (target_n * (s - c.mu * co) + mg * s / 2.0 - c.mu * mg * co) / co;
  if (fl < 0.0) {
    throw InfeasibleError("target force achieved without cable tension (required F_l = " +
                          std::to_string(fl) + " N)");
  }
  return fl;
}

}  // namespace orifold
