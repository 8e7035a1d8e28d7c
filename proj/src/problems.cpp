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
#include "homotopt/problems.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "homotopt/tracker.hpp"

namespace homotopt {

namespace {

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

MultiPoly unit_ball_poly(int n) {
  MultiPoly p = MultiPoly::constant(n, 1.0);
  for (int i = 0; i < n; ++i) {
    const MultiPoly xi = MultiPoly::variable(n, i);
    p = p - xi * xi;
  }
  return p;
}

void check_direction(const Eigen::VectorXd& w, int n, const char* who) {
  if (w.size() != n) throw std::invalid_argument(std::string(who) + ": direction has the wrong dimension");
  if (w.isZero(0.0) || !w.allFinite()) throw std::invalid_argument(std::string(who) + ": direction must be nonzero");
}

void check_origin(const Description& d, const char* who) {
  if (!(d.value(1.0, Eigen::VectorXd::Zero(d.n_vars())) > 0.0))
    throw std::invalid_argument(std::string(who) + ": origin is not strictly feasible");
}

}  // namespace

MultiPoly normalized_symmetric_pk(int n, int k) {
  return (1.0 / binomial(n + 1, k)) * elementary_symmetric_pk(n, k);
}

Problem hyperbolic_symmetric(int n, int k, const Eigen::VectorXd& w, double eps_max, int repeat) {
  if (n < 2) throw std::invalid_argument("hyperbolic_symmetric: n must be at least 2");
  if (k < 2 || k > n) throw std::invalid_argument("hyperbolic_symmetric: k must satisfy 2 <= k <= n");
  check_direction(w, n, "hyperbolic_symmetric");
  Description d = rz_product_homotopy(unit_ball_poly(n), normalized_symmetric_pk(n, k), SmoothingSchedule{eps_max},
                                      repeat);
  return {"symmetric(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")", std::move(d), linear(w),
          initial_point_unit_ball(w)};
}

Problem concave_problem(std::string name, const Description& target, const Eigen::VectorXd& w) {
  check_direction(w, target.n_vars(), "concave_problem");
  check_origin(target, name.c_str());
  return {std::move(name), concave_combo(unit_ball(target.n_vars()), target), linear(w), initial_point_unit_ball(w)};
}

Problem ellipse_problem(const std::vector<Eigen::VectorXd>& focal_points, double r, const Eigen::VectorXd& w) {
  return concave_problem("ellipse(k=" + std::to_string(focal_points.size()) + ")", k_ellipse(focal_points, r), w);
}

Problem pnorm_problem(int p, double r, int n, const Eigen::VectorXd& w) {
  return concave_problem("pnorm(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")", pnorm_ball(p, r, n), w);
}

Problem geometric_problem(const std::vector<double>& c, const std::vector<Eigen::VectorXd>& b,
                          const std::vector<double>& a, double level, const Eigen::VectorXd& w) {
  return concave_problem("geometric(terms=" + std::to_string(c.size()) + ")", geometric_constraint(c, b, a, level),
                         w);
}

Problem distance_problem(const Description& p1, const Eigen::VectorXd& y, const Eigen::VectorXd& w0) {
  const int n = p1.n_vars();
  check_direction(w0, n, "distance_problem");
  if (y.size() != n) throw std::invalid_argument("distance_problem: y has the wrong dimension");
  check_origin(p1, "distance_problem");
  if (!(p1.value(1.0, y) < 0.0)) throw std::invalid_argument("distance_problem: y must lie outside the target set");
  return {"distance", concave_combo(unit_ball(n), p1), objective_homotopy(linear(w0), negative_distance(y)),
          initial_point_unit_ball(w0)};
}

std::uint64_t sdp_lift_size(int k, int n) {
  if (n < 0 || k < 1 || k > n + 1) throw std::invalid_argument("sdp_lift_size: requires 1 <= k <= n+1");
  // C(n+1, i) i! = (n+1)! / (n+1-i)! is a falling factorial.
  std::uint64_t sum = 0, term = 1;
  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      const std::uint64_t f = static_cast<std::uint64_t>(n + 2 - i);
      if (term > std::numeric_limits<std::uint64_t>::max() / f) throw std::overflow_error("sdp_lift_size: overflow");
      term *= f;
    }
    if (sum > std::numeric_limits<std::uint64_t>::max() - term) throw std::overflow_error("sdp_lift_size: overflow");
    sum += term;
  }
  return sum;
}

Eigen::VectorXd random_direction(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXd w(n);
  do {
    for (int i = 0; i < n; ++i) w(i) = g(rng);
  } while (w.norm() < 1e-12);
  return w / w.norm();
}

EllipseInstance random_ellipse_instance(int k, int n, std::mt19937_64& rng) {
  if (k < 1 || n < 1) throw std::invalid_argument("random_ellipse_instance: k and n must be positive");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  EllipseInstance inst;
  inst.r = 2.0 * k;
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd v(n);
    for (int j = 0; j < n; ++j) v(j) = u(rng);
    inst.focal_points.push_back(v);
  }
  return inst;
}

GeometricInstance random_geometric_instance(int n, int terms, std::mt19937_64& rng) {
  if (terms < 1 || n < 1) throw std::invalid_argument("random_geometric_instance: sizes must be positive");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> lv(0.0, 1.0);
  GeometricInstance inst;
  for (int i = 0; i < terms; ++i) {
    Eigen::VectorXd v(n);
    for (int j = 0; j < n; ++j) v(j) = u(rng);
    inst.b.push_back(v);
    inst.c.push_back(1.0);
    inst.a.push_back(0.0);
  }
  // (terms, 2 terms]
  inst.level = terms * (2.0 - lv(rng));
  return inst;
}

Problem distance_example() {
  std::vector<Eigen::VectorXd> b{Eigen::Vector2d(2.0, 2.0), Eigen::Vector2d(-1.6, 1.6), Eigen::Vector2d(-0.6, 1.2),
                                 Eigen::Vector2d(0.0, -1.2)};
  const Description p1 = log_sum_exp_constraint({1.0, 1.0, 1.0, 1.0}, b, {0.0, 0.0, 0.0, 0.0}, 5.0);
  Problem pr = distance_problem(p1, Eigen::Vector2d(-6.0, 2.5), Eigen::Vector2d(-1.0, 1.0));
  pr.name = "distance-B3";
  return pr;
}

PencilPair failing_pencil_pair() {
  Eigen::Matrix2d diag, off;
  diag << -1.0, 0.0, 0.0, 1.0;
  off << 0.0, 1.0, 1.0, 0.0;
  return {MatrixPencil{2, {diag, off}}, MatrixPencil{2, {off, diag}}};
}

Problem failing_pencil_problem(const Eigen::VectorXd& w) {
  check_direction(w, 2, "failing_pencil_problem");
  const PencilPair pp = failing_pencil_pair();
  return {"failing-pencil", pencil_homotopy(pp.a, pp.b), linear(w), initial_point_unit_ball(w)};
}

EllipseInstance three_ellipse_instance() {
  return {{Eigen::Vector2d(2.0, 0.0), Eigen::Vector2d(-2.0, 0.0), Eigen::Vector2d(6.0, 0.0)}, 12.0};
}

Problem three_ellipse_problem() {
  const EllipseInstance e = three_ellipse_instance();
  Problem pr = ellipse_problem(e.focal_points, e.r, Eigen::Vector2d(1.0, 1.0));
  pr.name = "three-ellipse";
  return pr;
}

}  // namespace homotopt
