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
#ifndef HOMOTOPT_KERNELS_HPP
#define HOMOTOPT_KERNELS_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace homotopt {

// Data-parallel kernels. Each has a serial reference and an OpenMP variant
// that must return identical results regardless of thread count.

using PointFunction = std::function<double(const Eigen::VectorXd&)>;

struct Box2D {
  double x_lo = -1.0, x_hi = 1.0;
  double y_lo = -1.0, y_hi = 1.0;
};

struct GridArgmax {
  bool found = false;
  int ix = -1;
  int iy = -1;
  Eigen::Vector2d point = Eigen::Vector2d::Zero();
  double value = 0.0;
};

/// Best objective over grid points with feasibility >= 0. Ties go to the
/// lexicographically smallest (ix, iy). Points whose evaluation throws are skipped.
GridArgmax grid_argmax_serial(const PointFunction& feasibility, const PointFunction& objective, const Box2D& box,
                              int resolution);
GridArgmax grid_argmax_parallel(const PointFunction& feasibility, const PointFunction& objective, const Box2D& box,
                                int resolution);

struct RayHit {
  double angle = 0.0;
  double radius = 0.0;
  bool bounded = true;
};

/// Boundary of the region {g >= 0} around the origin in the plane, by
/// bisection along rays at angles 2 pi j / rays. A ray that stays feasible up
/// to max_radius is reported unbounded at max_radius.
std::vector<RayHit> boundary_rays_serial(const PointFunction& g, int rays, double max_radius);
std::vector<RayHit> boundary_rays_parallel(const PointFunction& g, int rays, double max_radius);

/// g at each column of points.
Eigen::VectorXd evaluate_batch_serial(const PointFunction& g, const Eigen::MatrixXd& points);
Eigen::VectorXd evaluate_batch_parallel(const PointFunction& g, const Eigen::MatrixXd& points);

}  // namespace homotopt

#endif  // HOMOTOPT_KERNELS_HPP
