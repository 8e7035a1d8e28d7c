// Copyright 2026 The Homotopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "homotopt/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace homotopt {

namespace {

double grid_coord(double lo, double hi, int i, int resolution) {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(resolution - 1);
}

void check_grid(const Box2D& box, int resolution) {
  if (resolution < 2) throw std::invalid_argument("grid: resolution must be at least 2");
  if (!(box.x_hi > box.x_lo && box.y_hi > box.y_lo)) throw std::invalid_argument("grid: empty box");
}

bool better(const GridArgmax& a, const GridArgmax& b) {
  if (!a.found) return false;
  if (!b.found) return true;
  if (a.value != b.value) return a.value > b.value;
  return a.ix != b.ix ? a.ix < b.ix : a.iy < b.iy;
}

// Scans columns [ix_begin, ix_end) in lexicographic order.
GridArgmax scan_columns(const PointFunction& feas, const PointFunction& obj, const Box2D& box, int res, int ix_begin,
                        int ix_end) {
  GridArgmax best;
  Eigen::VectorXd x(2);
  for (int ix = ix_begin; ix < ix_end; ++ix) {
    x(0) = grid_coord(box.x_lo, box.x_hi, ix, res);
    for (int iy = 0; iy < res; ++iy) {
      x(1) = grid_coord(box.y_lo, box.y_hi, iy, res);
      double v;
      try {
        if (!(feas(x) >= 0.0)) continue;
        v = obj(x);
      } catch (const std::exception&) {
        continue;
      }
      if (!best.found || v > best.value) best = {true, ix, iy, Eigen::Vector2d(x(0), x(1)), v};
    }
  }
  return best;
}

RayHit bisect_ray(const PointFunction& g, double angle, double max_radius) {
  const Eigen::Vector2d u(std::cos(angle), std::sin(angle));
  auto at = [&](double s) {
    try {
      return g(Eigen::VectorXd(s * u));
    } catch (const std::exception&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  constexpr int kMarch = 512;
  constexpr int kBisect = 60;
  double lo = 0.0, hi = -1.0;
  for (int j = 1; j <= kMarch; ++j) {
    const double s = max_radius * j / kMarch;
    const double v = at(s);
    if (std::isnan(v)) continue;
    if (v < 0.0) {
      hi = s;
      break;
    }
    lo = s;
  }
  if (hi < 0.0) return {angle, max_radius, false};
  for (int it = 0; it < kBisect; ++it) {
    const double mid = 0.5 * (lo + hi);
    (at(mid) >= 0.0 ? lo : hi) = mid;
  }
  return {angle, 0.5 * (lo + hi), true};
}

void check_rays(int rays, double max_radius) {
  if (rays < 1) throw std::invalid_argument("boundary_rays: need at least one ray");
  if (!(max_radius > 0.0)) throw std::invalid_argument("boundary_rays: max_radius must be positive");
}

double ray_angle(int j, int rays) { return 2.0 * std::numbers::pi * j / rays; }

}  // namespace

GridArgmax grid_argmax_serial(const PointFunction& feasibility, const PointFunction& objective, const Box2D& box,
                              int resolution) {
  check_grid(box, resolution);
  return scan_columns(feasibility, objective, box, resolution, 0, resolution);
}

GridArgmax grid_argmax_parallel(const PointFunction& feasibility, const PointFunction& objective, const Box2D& box,
                                int resolution) {
  check_grid(box, resolution);
  GridArgmax best;
#pragma omp parallel
  {
    GridArgmax local;
#pragma omp for schedule(static)
    for (int ix = 0; ix < resolution; ++ix) {
      const GridArgmax col = scan_columns(feasibility, objective, box, resolution, ix, ix + 1);
      if (better(col, local)) local = col;
    }
#pragma omp critical
    if (better(local, best)) best = local;
  }
  return best;
}

std::vector<RayHit> boundary_rays_serial(const PointFunction& g, int rays, double max_radius) {
  check_rays(rays, max_radius);
  std::vector<RayHit> out(rays);
  for (int j = 0; j < rays; ++j) out[j] = bisect_ray(g, ray_angle(j, rays), max_radius);
  return out;
}

std::vector<RayHit> boundary_rays_parallel(const PointFunction& g, int rays, double max_radius) {
  check_rays(rays, max_radius);
  std::vector<RayHit> out(rays);
#pragma omp parallel for schedule(dynamic, 8)
  for (int j = 0; j < rays; ++j) out[j] = bisect_ray(g, ray_angle(j, rays), max_radius);
  return out;
}

Eigen::VectorXd evaluate_batch_serial(const PointFunction& g, const Eigen::MatrixXd& points) {
  Eigen::VectorXd out(points.cols());
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    try {
      out(j) = g(points.col(j));
    } catch (const std::exception&) {
      out(j) = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

Eigen::VectorXd evaluate_batch_parallel(const PointFunction& g, const Eigen::MatrixXd& points) {
  Eigen::VectorXd out(points.cols());
  const Eigen::Index cols = points.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < cols; ++j) {
    try {
      out(j) = g(points.col(j));
    } catch (const std::exception&) {
      out(j) = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

}  // namespace homotopt
