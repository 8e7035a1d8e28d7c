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
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "homotopt/lagrange.hpp"
#include "homotopt/oracle.hpp"
#include "homotopt/problems.hpp"
#include "homotopt/tracker.hpp"

using namespace homotopt;

TEST(SdpLiftSize, TableValues) {
  EXPECT_EQ(sdp_lift_size(2, 3), 5u);
  EXPECT_EQ(sdp_lift_size(3, 4), 26u);
  EXPECT_EQ(sdp_lift_size(4, 5), 157u);
  EXPECT_EQ(sdp_lift_size(2, 2), 4u);
  EXPECT_EQ(sdp_lift_size(3, 5), 1u + 6 + 30);
  EXPECT_EQ(sdp_lift_size(4, 8), 586u);
  EXPECT_THROW(sdp_lift_size(0, 3), std::invalid_argument);
  EXPECT_THROW(sdp_lift_size(5, 3), std::invalid_argument);
  EXPECT_THROW(sdp_lift_size(30, 30), std::overflow_error);
}

TEST(HyperbolicSymmetric, QuadraticPlanarOptimum) {
  // max x1 s.t. 3 - x1^2 - x1 x2 - x2^2 >= 0 is attained at (2, -1) with value 2;
  // the boundary crossing along e1 is sqrt(3), which is not the maximizer.
  const Problem pr = hyperbolic_symmetric(2, 2, Eigen::Vector2d(1, 0));
  const SolveReport r = track(pr.description, pr.objective, pr.x0);
  ASSERT_TRUE(r.converged()) << to_string(r.status);
  EXPECT_NEAR(r.final_point(0), 2.0, 1e-8);
  EXPECT_NEAR(r.final_point(1), -1.0, 1e-8);
  EXPECT_NEAR(r.final_value, 2.0, 1e-8);
  const MultiPoly p2 = elementary_symmetric_pk(2, 2);
  EXPECT_NEAR(p2.eval(Eigen::Vector2d(std::sqrt(3.0), 0)), 0.0, 1e-14);
  const OracleOptimum g = grid_maximizer_2d(polynomial_description(p2), linear(Eigen::Vector2d(1, 0)),
                                            Box2D{-3, 3, -3, 3}, 2001);
  EXPECT_NEAR(g.value, 2.0, 3e-3);
}

TEST(HyperbolicSymmetric, RandomDirectionSatisfiesKkt) {
  std::mt19937_64 rng(4);
  const Eigen::VectorXd w = random_direction(4, rng);
  const Problem pr = hyperbolic_symmetric(4, 2, w);
  const SolveReport r = track(pr.description, pr.objective, pr.x0);
  ASSERT_TRUE(r.converged());
  const Description target = polynomial_description(normalized_symmetric_pk(4, 2));
  EXPECT_NEAR(target.value(1, r.final_point), 0.0, 1e-9);
  EXPECT_LE(kkt_residual(target, linear(w), r.final_point), 1e-8);
}

TEST(HyperbolicSymmetric, OptimumOfHigherOrderLiesInLowerOrderSet) {
  const Problem pr = hyperbolic_symmetric(3, 3, Eigen::Vector3d(1, 1, 1));
  const SolveReport r = track(pr.description, pr.objective, pr.x0);
  ASSERT_TRUE(r.converged());
  const MultiPoly p2 = elementary_symmetric_pk(3, 2);
  for (auto z : roots(restrict(p2, r.final_point)))
    if (std::abs(z.imag()) < 1e-8) {
      EXPECT_FALSE(z.real() >= 0.0 && z.real() < 1.0 - 1e-9);
    }
}

TEST(HyperbolicSymmetric, RejectsKOutOfRange) {
  EXPECT_THROW(hyperbolic_symmetric(3, 1, Eigen::Vector3d(1, 0, 0)), std::invalid_argument);
  EXPECT_THROW(hyperbolic_symmetric(3, 4, Eigen::Vector3d(1, 0, 0)), std::invalid_argument);
  EXPECT_THROW(hyperbolic_symmetric(3, 2, Eigen::Vector2d(1, 0)), std::invalid_argument);
}

TEST(Problems, StartPointIsStationary) {
  std::mt19937_64 rng(5);
  std::vector<Problem> probs{hyperbolic_symmetric(4, 3, random_direction(4, rng)),
                             pnorm_problem(8, 1.0, 3, random_direction(3, rng)), three_ellipse_problem(),
                             distance_example(), failing_pencil_problem(Eigen::Vector2d(1, -1))};
  const GeometricInstance g = random_geometric_instance(3, 12, rng);
  probs.push_back(geometric_problem(g.c, g.b, g.a, g.level, random_direction(3, rng)));
  for (const auto& pr : probs) {
    const int k = select_pivot(pr.objective.eval(0, pr.x0).grad);
    const StationaritySystem sys(pr.description, pr.objective, k);
    EXPECT_LT(corrector_residual(sys, pr.x0, 0.0).cwiseAbs().maxCoeff(), 1e-10) << pr.name;
  }
}

TEST(Problems, ThreeEllipseConverges) {
  const Problem pr = three_ellipse_problem();
  const SolveReport r = track(pr.description, pr.objective, pr.x0);
  ASSERT_TRUE(r.converged());
  const EllipseInstance e = three_ellipse_instance();
  EXPECT_LE(std::abs(k_ellipse(e.focal_points, e.r).value(1, r.final_point)), 1e-8);
}

TEST(Problems, DistanceExampleReachesBoundary) {
  const Problem pr = distance_example();
  const SolveReport r = track(pr.description, pr.objective, pr.x0);
  ASSERT_TRUE(r.converged()) << to_string(r.status);
  std::vector<Eigen::VectorXd> b{Eigen::Vector2d(2, 2), Eigen::Vector2d(-1.6, 1.6), Eigen::Vector2d(-0.6, 1.2),
                                 Eigen::Vector2d(0, -1.2)};
  const Description p1 = log_sum_exp_constraint({1, 1, 1, 1}, b, {0, 0, 0, 0}, 5.0);
  EXPECT_LE(std::abs(p1.value(1, r.final_point)), 1e-8);
  EXPECT_LE(kkt_residual(p1, negative_distance(Eigen::Vector2d(-6, 2.5)), r.final_point), 1e-6);
}

TEST(Problems, RejectInfeasibleOrigin) {
  EXPECT_THROW(ellipse_problem({Eigen::Vector2d(3, 0)}, 2.0, Eigen::Vector2d(1, 0)), std::invalid_argument);
  std::vector<Eigen::VectorXd> b{Eigen::Vector2d(1, 0)};
  EXPECT_THROW(geometric_problem({1}, b, {0}, 1.0, Eigen::Vector2d(1, 0)), std::invalid_argument);
  EXPECT_THROW(distance_problem(unit_ball(2), Eigen::Vector2d(0.5, 0), Eigen::Vector2d(1, 0)), std::invalid_argument);
}

TEST(RandomInstances, DeterministicAndInRange) {
  std::mt19937_64 a(9), b(9);
  const EllipseInstance ea = random_ellipse_instance(5, 3, a), eb = random_ellipse_instance(5, 3, b);
  EXPECT_EQ(ea.r, 10.0);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(ea.focal_points[i], eb.focal_points[i]);
    EXPECT_LE(ea.focal_points[i].cwiseAbs().maxCoeff(), 1.0);
  }
  std::mt19937_64 c(10);
  for (int s = 0; s < 100; ++s) EXPECT_NEAR(random_direction(4, c).norm(), 1.0, 1e-14);
  const GeometricInstance g = random_geometric_instance(3, 12, c);
  EXPECT_GT(g.level, 12.0);
  EXPECT_LE(g.level, 24.0);
}
