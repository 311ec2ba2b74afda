#pragma once

// Folded quad mesh and flat crease pattern of an n x m Miura module.
//
// Vertices form a (2n+1) x (2m+1) grid indexed (i, j), i along the length and
// j along the width. Consecutive i alternate between z = 0 and z = h (the
// valley/ridge zigzag of the folded section), consecutive j alternate an
// in-plane x offset of p cos(phi/2) (the zigzag crease lines). Every quad is a
// parallelogram with both sides p, so neighbouring facets share their crease
// vertices and the vertex bounding box is (l, w, h) by construction.

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <vector>

#include "orifold/fold_geometry.hpp"

namespace orifold {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Box3 {
  Vec3 min;
  Vec3 max;

  Vec3 extent() const { return {max.x - min.x, max.y - min.y, max.z - min.z}; }
};

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 4>> quads;

  Box3 bounding_box() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    Box3 box{{inf, inf, inf}, {-inf, -inf, -inf}};
    for (const Vec3& v : vertices) {
      box.min = {std::min(box.min.x, v.x), std::min(box.min.y, v.y), std::min(box.min.z, v.z)};
      box.max = {std::max(box.max.x, v.x), std::max(box.max.y, v.y), std::max(box.max.z, v.z)};
    }
    return box;
  }
};

namespace detail {

struct Grid {
  std::size_t cols = 0;  // 2n + 1
  std::size_t rows = 0;  // 2m + 1

  std::size_t index(std::size_t i, std::size_t j) const { return j * cols + i; }
};

inline Grid grid_for(const FoldParams& params) {
  return {static_cast<std::size_t>(2 * params.n + 1),
          static_cast<std::size_t>(2 * params.m + 1)};
}

inline std::vector<Vec3> vertex_grid(const FoldParams& params, double theta) {
  const double phi = phi_from_theta(params, theta);
  const double p = params.p;
  // edge along the length: (run, 0, +-rise); edge across: (+-skew, span, 0)
  const double run = p * sin_deg(theta / 2.0);
  const double rise = p * cos_deg(theta / 2.0);
  const double skew = p * cos_deg(phi / 2.0);
  const double span = p * sin_deg(phi / 2.0);

  const Grid g = grid_for(params);
  std::vector<Vec3> out(g.cols * g.rows);
  for (std::size_t j = 0; j < g.rows; ++j) {
    for (std::size_t i = 0; i < g.cols; ++i) {
      out[g.index(i, j)] = {static_cast<double>(i) * run + ((j % 2 == 1) ? skew : 0.0),
                            static_cast<double>(j) * span,
                            (i % 2 == 1) ? rise : 0.0};
    }
  }
  return out;
}

inline std::vector<std::array<std::size_t, 4>> grid_quads(const Grid& g) {
  std::vector<std::array<std::size_t, 4>> quads;
  quads.reserve((g.cols - 1) * (g.rows - 1));
  for (std::size_t j = 0; j + 1 < g.rows; ++j) {
    for (std::size_t i = 0; i + 1 < g.cols; ++i) {
      quads.push_back({g.index(i, j), g.index(i + 1, j), g.index(i + 1, j + 1),
                       g.index(i, j + 1)});
    }
  }
  return quads;
}

}  // namespace detail

/// Quad mesh of the module folded to theta: 4nm facets, (2n+1)(2m+1) vertices.
inline Mesh folded_mesh(const FoldParams& params, double theta) {
  validate(params);
  validate_theta(theta);
  Mesh mesh;
  mesh.vertices = detail::vertex_grid(params, theta);
  mesh.quads = detail::grid_quads(detail::grid_for(params));
  return mesh;
}

enum class CreaseKind { Mountain, Valley, Boundary };

struct CreaseSegment {
  std::size_t a = 0;
  std::size_t b = 0;
  CreaseKind kind = CreaseKind::Boundary;
};

struct HoleMark {
  Vec2 center;
  double diameter = 2.0;
};

struct HoleSpec {
  double diameter = 2.0;  // mm
  double spacing = 5.0;   // centre-to-centre, mm
};

struct CreasePattern {
  std::vector<Vec2> vertices;
  std::vector<std::array<std::size_t, 4>> facets;
  std::vector<CreaseSegment> creases;
  std::vector<HoleMark> holes;
  double length = 0.0;
  double width = 0.0;
};

/// Flat (theta = 180) pattern with mountain/valley labels as seen from +z.
///
/// The straight crease rows (constant j) alternate M/V along their length and
/// flip between adjacent rows; the zigzag crease columns (constant i) are
/// mountain on odd i and valley on even i. Each facet carries two cable holes
/// on its centroid, separated along the length axis.
inline CreasePattern crease_pattern(const FoldParams& params, HoleSpec holes = {}) {
  validate(params);
  const detail::Grid g = detail::grid_for(params);
  const auto flat = detail::vertex_grid(params, 180.0);

  CreasePattern cp;
  cp.vertices.reserve(flat.size());
  for (const Vec3& v : flat) cp.vertices.push_back({v.x, v.y});
  cp.facets = detail::grid_quads(g);

  const std::size_t last_i = g.cols - 1;
  const std::size_t last_j = g.rows - 1;
  for (std::size_t j = 0; j < g.rows; ++j) {
    for (std::size_t i = 0; i < last_i; ++i) {
      CreaseKind kind = CreaseKind::Boundary;
      if (j != 0 && j != last_j) {
        kind = ((i + j) % 2 == 0) ? CreaseKind::Mountain : CreaseKind::Valley;
      }
      cp.creases.push_back({g.index(i, j), g.index(i + 1, j), kind});
    }
  }
  for (std::size_t i = 0; i < g.cols; ++i) {
    for (std::size_t j = 0; j < last_j; ++j) {
      CreaseKind kind = CreaseKind::Boundary;
      if (i != 0 && i != last_i) {
        kind = (i % 2 == 1) ? CreaseKind::Mountain : CreaseKind::Valley;
      }
      cp.creases.push_back({g.index(i, j), g.index(i, j + 1), kind});
    }
  }

  cp.holes.reserve(2 * cp.facets.size());
  for (const auto& f : cp.facets) {
    Vec2 c{};
    for (std::size_t k : f) {
      c.x += cp.vertices[k].x / 4.0;
      c.y += cp.vertices[k].y / 4.0;
    }
    const double half = holes.spacing / 2.0;
    cp.holes.push_back({{c.x - half, c.y}, holes.diameter});
    cp.holes.push_back({{c.x + half, c.y}, holes.diameter});
  }

  const Dimensions d = dimensions(params, 180.0);
  cp.length = d.l;
  cp.width = d.w;
  return cp;
}

}  // namespace orifold
