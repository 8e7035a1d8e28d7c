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
#ifndef HOMOTOPT_PROBLEMS_HPP
#define HOMOTOPT_PROBLEMS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "homotopt/descriptions.hpp"
#include "homotopt/objectives.hpp"

namespace homotopt {

/// A homotopy problem ready for track(): description, objective and start point.
struct Problem {
  std::string name;
  Description description;
  Objective objective;
  Eigen::VectorXd x0;
};

/// max w . x over R(p_k), reached from the unit ball by the smoothed product homotopy.
/// p_k is scaled by 1 / C(n+1, k) so that p_k(0) = 1. Requires 2 <= k <= n.
Problem hyperbolic_symmetric(int n, int k, const Eigen::VectorXd& w, double eps_max = 0.05, int repeat = 1);

/// The dehomogenized symmetric polynomial used by hyperbolic_symmetric.
MultiPoly normalized_symmetric_pk(int n, int k);

Problem ellipse_problem(const std::vector<Eigen::VectorXd>& focal_points, double r, const Eigen::VectorXd& w);
Problem pnorm_problem(int p, double r, int n, const Eigen::VectorXd& w);
Problem geometric_problem(const std::vector<double>& c, const std::vector<Eigen::VectorXd>& b,
                          const std::vector<double>& a, double level, const Eigen::VectorXd& w);
/// Closest point of {p1 >= 0} to y, started from max w0 . x over the unit ball.
Problem distance_problem(const Description& p1, const Eigen::VectorXd& y, const Eigen::VectorXd& w0);

/// Problem from a static target description, linked to the unit ball by concave_combo.
Problem concave_problem(std::string name, const Description& target, const Eigen::VectorXd& w);

/// sum_{i<k} C(n+1, i) i!. Requires 1 <= k <= n+1; throws std::overflow_error past 64 bits.
std::uint64_t sdp_lift_size(int k, int n);

// Random instances. Directions are uniform on the sphere.
Eigen::VectorXd random_direction(int n, std::mt19937_64& rng);

struct EllipseInstance {
  std::vector<Eigen::VectorXd> focal_points;
  double r = 0.0;
};
/// k focal points uniform in [-1, 1]^n with r = 2k.
EllipseInstance random_ellipse_instance(int k, int n, std::mt19937_64& rng);

struct GeometricInstance {
  std::vector<double> c;
  std::vector<Eigen::VectorXd> b;
  std::vector<double> a;
  double level = 0.0;
};
/// terms exponentials with b uniform in [-1, 1]^n, a = 0, c = 1 and level uniform in (terms, 2 terms].
GeometricInstance random_geometric_instance(int n, int terms, std::mt19937_64& rng);

/// Closest-point instance in the plane: p1 = 5 - log sum exp(b_k . x), y = (-6, 5/2), w0 = (-1, 1).
Problem distance_example();

/// The diagonal pencil pair whose intermediate sets are unbounded at t = 1/2.
struct PencilPair {
  MatrixPencil a;
  MatrixPencil b;
};
PencilPair failing_pencil_pair();
Problem failing_pencil_problem(const Eigen::VectorXd& w);

/// Foci (2,0), (-2,0), (6,0) with r = 12 and objective x1 + x2.
Problem three_ellipse_problem();
EllipseInstance three_ellipse_instance();

}  // namespace homotopt

#endif  // HOMOTOPT_PROBLEMS_HPP
