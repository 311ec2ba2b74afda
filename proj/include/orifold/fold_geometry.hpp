#pragma once

// Closed-form Miura-Ori kinematics. A single fold angle theta (180 = flat)
// drives height, length and width of an n x m module of rhombic facets with
// side p and sector angle beta. All angles are in degrees, lengths in mm.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "orifold/angles.hpp"
#include "orifold/errors.hpp"

namespace orifold {

struct FoldParams {
  double p = 22.0;              // facet side length (mm)
  double beta = 70.0;           // sector angle (deg)
  int n = 4;                    // units along length
  int m = 3;                    // units along width
  double theta_neutral = 130.0; // unactuated fold angle (deg)

  bool operator==(const FoldParams&) const = default;
};

struct FoldState {
  double theta = 180.0;
};

struct Dimensions {
  double h = 0.0;
  double l = 0.0;
  double w = 0.0;
  double phi = 0.0;
};

inline void validate_theta(double theta) {
  if (!(theta > 0.0 && theta <= 180.0)) {
    throw DomainError("theta", "fold angle " + std::to_string(theta) +
                                   " deg outside (0, 180]");
  }
}

inline void validate_beta(double beta) {
  if (!(beta > 0.0 && beta < 90.0)) {
    throw DomainError("beta", "sector angle " + std::to_string(beta) +
                                  " deg outside (0, 90)");
  }
}

inline void validate(const FoldParams& params) {
  if (!(params.p > 0.0) || !std::isfinite(params.p)) {
    throw DomainError("p", "facet side length must be positive");
  }
  validate_beta(params.beta);
  if (params.n < 1) throw DomainError("n", "unit count along length must be >= 1");
  if (params.m < 1) throw DomainError("m", "unit count along width must be >= 1");
  if (!(params.theta_neutral > 0.0 && params.theta_neutral <= 180.0)) {
    throw DomainError("theta_neutral", "neutral fold angle outside (0, 180]");
  }
}

/// In-plane angle between facet edges: phi = 2 acos(cos(beta) sin(theta/2)).
inline double phi_from_theta(double beta, double theta) {
  validate_beta(beta);
  validate_theta(theta);
  const double s = sin_deg(theta / 2.0);
  // flat state, phi collapses to the full sector angle on both sides
  if (s == 1.0) return 2.0 * beta;
  return 2.0 * acos_deg(cos_deg(beta) * s);
}

inline double phi_from_theta(const FoldParams& params, double theta) {
  validate(params);
  return phi_from_theta(params.beta, theta);
}

inline double height_at(double p, double theta) { return p * cos_deg(theta / 2.0); }

/// Height, length and width of the module at fold angle theta.
inline Dimensions dimensions(const FoldParams& params, double theta) {
  const double phi = phi_from_theta(params, theta);
  const double p = params.p;
  Dimensions d;
  d.phi = phi;
  d.h = height_at(p, theta);
  d.l = params.n * (2.0 * p * sin_deg(theta / 2.0)) + p * cos_deg(phi / 2.0);
  d.w = params.m * (2.0 * p * sin_deg(phi / 2.0));
  return d;
}

/// Inverse of the height relation; h must lie in [0, p).
inline double theta_from_height(const FoldParams& params, double h) {
  validate(params);
  if (!(h >= 0.0 && h < params.p)) {
    throw DomainError("h", "height " + std::to_string(h) +
                               " mm unreachable for facet length p = " +
                               std::to_string(params.p) + " mm");
  }
  if (h == 0.0) return 180.0;
  return 2.0 * acos_deg(h / params.p);
}

struct DimensionRow {
  double beta = 0.0;
  double theta = 0.0;
  double h = 0.0;
  double l = 0.0;
  double w = 0.0;
};

using DimensionTable = std::vector<DimensionRow>;

/// Inclusive theta grid theta_min + k*step, k = 0, 1, ... A final point within
/// 1e-9 step of theta_max snaps onto theta_max.
inline std::vector<double> theta_grid(double theta_min, double theta_max, double step) {
  if (!(theta_min > 0.0 && theta_min < theta_max && theta_max <= 180.0)) {
    throw DomainError("theta_range", "need 0 < theta_min < theta_max <= 180");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DomainError("step", "sweep step must be positive");
  }
  const double span = (theta_max - theta_min) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    double theta = theta_min + static_cast<double>(k) * step;
    if (std::abs(theta - theta_max) <= 1e-9 * step) theta = theta_max;
    grid.push_back(theta);
  }
  return grid;
}

/// Dimension table over betas x theta grid, beta-major in the order given,
/// theta ascending. `params.beta` is ignored in favour of `betas`.
inline DimensionTable sweep(const FoldParams& params, double theta_min, double theta_max,
                            double step, const std::vector<double>& betas) {
  if (betas.empty()) throw DomainError("betas", "at least one sector angle required");
  for (double b : betas) validate_beta(b);
  const auto grid = theta_grid(theta_min, theta_max, step);

  DimensionTable table;
  table.reserve(grid.size() * betas.size());
  for (double b : betas) {
    FoldParams local = params;
    local.beta = b;
    validate(local);
    for (double theta : grid) {
      const Dimensions d = dimensions(local, theta);
      table.push_back({b, theta, d.h, d.l, d.w});
    }
  }
  return table;
}

}  // namespace orifold
