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

#include "homotopt/descriptions.hpp"
#include "homotopt/errors.hpp"
#include "homotopt/problems.hpp"
#include "test_support.hpp"

using namespace homotopt;
using homotopt::testing::finite_difference_check;
using homotopt::testing::random_vector;

namespace {

MultiPoly ball_poly(int n) {
  MultiPoly p = MultiPoly::constant(n, 1.0);
  for (int i = 0; i < n; ++i) p = p - MultiPoly::variable(n, i) * MultiPoly::variable(n, i);
  return p;
}

// 10 - sum exp(b_k . x) with the four planar exponents used in the concave-combination demo.
Description exp_sum_target() {
  std::vector<Eigen::VectorXd> b{Eigen::Vector2d(0.2, 0.2), Eigen::Vector2d(-0.1, 0.2), Eigen::Vector2d(-0.2, -0.2),
                                 Eigen::Vector2d(0.1, -0.1)};
  return geometric_constraint({1, 1, 1, 1}, b, {0, 0, 0, 0}, 10.0);
}

void expect_fd_ok(const Description& d, std::mt19937_64& rng, double scale, int samples = 100,
                  double tol = 1e-5) {
  std::uniform_real_distribution<double> ut(0.05, 0.95);
  for (int s = 0; s < samples; ++s) {
    const double t = ut(rng);
    const Eigen::VectorXd x = random_vector(d.n_vars(), scale, rng);
    const auto c = finite_difference_check([&](double tt, const Eigen::VectorXd& xx) { return d.eval(tt, xx); }, t, x);
    EXPECT_LT(c.worst(), tol) << d.label() << " grad " << c.grad << " hess " << c.hess << " dt " << c.dt_value
                              << " dtg " << c.dt_grad;
  }
}

}  // namespace

TEST(UnitBall, Examples) {
  const Description d = unit_ball(3);
  const auto e0 = d.eval(0.3, Eigen::Vector3d::Zero());
  EXPECT_DOUBLE_EQ(e0.value, 1.0);
  EXPECT_TRUE(e0.grad.isZero());
  const auto e1 = d.eval(0.0, Eigen::Vector3d(1, 0, 0));
  EXPECT_DOUBLE_EQ(e1.value, 0.0);
  EXPECT_DOUBLE_EQ(e1.grad(0), -2.0);
  EXPECT_TRUE(e1.hess.isApprox(-2.0 * Eigen::Matrix3d::Identity()));
  EXPECT_EQ(e1.dt_value, 0.0);
  EXPECT_TRUE(e1.dt_grad.isZero());
  EXPECT_THROW(d.eval(0.0, Eigen::Vector2d(0, 0)), std::invalid_argument);
}

TEST(ConcaveCombo, EndpointsAndDegenerateCase) {
  std::mt19937_64 rng(41);
  const Description p1 = exp_sum_target();
  const Description h = concave_combo(unit_ball(2), p1);
  for (int s = 0; s < 20; ++s) {
    const Eigen::VectorXd x = random_vector(2, 3.0, rng);
    const auto a = h.eval(0.0, x), b = unit_ball(2).eval(0.0, x);
    EXPECT_NEAR(a.value, b.value, 1e-14);
    EXPECT_TRUE(a.grad.isApprox(b.grad));
    EXPECT_TRUE(a.hess.isApprox(b.hess));
    const auto q = p1.eval(0.0, x);
    EXPECT_NEAR(a.dt_value, q.value - b.value, 1e-12);
    EXPECT_TRUE(a.dt_grad.isApprox(q.grad - b.grad));
  }
  const Description same = concave_combo(unit_ball(2), unit_ball(2));
  const Eigen::Vector2d x(0.3, -0.7);
  EXPECT_NEAR(same.value(0.2, x), same.value(0.9, x), 1e-15);
  for (double t : {0.0, 0.25, 0.5, 1.0}) EXPECT_NEAR(h.value(t, Eigen::Vector2d::Zero()), (1 - t) + 6 * t, 1e-12);
}

TEST(ConcaveCombo, RadiusGrowthHasConstantTimeDerivative) {
  const Description big = pnorm_ball(2, 2.0, 2);
  const Description h = concave_combo(unit_ball(2), big);
  std::mt19937_64 rng(43);
  for (int s = 0; s < 10; ++s) EXPECT_NEAR(h.eval(0.4, random_vector(2, 2.0, rng)).dt_value, 3.0, 1e-12);
}

TEST(ConcaveCombo, RejectsNonpositiveOrigin) {
  std::vector<Eigen::VectorXd> b{Eigen::Vector2d(1, 0)};
  const Description bad = geometric_constraint({1}, b, {0}, 2.0);
  EXPECT_NO_THROW(concave_combo(unit_ball(2), bad));
  const Description shifted = k_ellipse({Eigen::Vector2d(3, 0)}, 4.0);
  EXPECT_NO_THROW(concave_combo(unit_ball(2), shifted));
  EXPECT_THROW(k_ellipse({Eigen::Vector2d(3, 0)}, 2.0), std::invalid_argument);
  EXPECT_THROW(concave_combo(unit_ball(2), unit_ball(3)), std::invalid_argument);
}

TEST(ConcaveCombo, ContainmentBetweenEndpointSets) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  const Description p0 = unit_ball(2), p1 = exp_sum_target();
  const Description h = concave_combo(p0, p1);
  int violations = 0;
  for (int s = 0; s < 10000; ++s) {
    const Eigen::VectorXd x = random_vector(2, 12.0, rng);
    const double t = ut(rng);
    const bool in0 = p0.value(0, x) >= 0, in1 = p1.value(0, x) >= 0, in_t = h.value(t, x) >= 0;
    if ((in0 && in1 && !in_t) || (in_t && !in0 && !in1)) ++violations;
  }
  EXPECT_EQ(violations, 0);
}

TEST(ConcaveCombo, StrictConcavityBound) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  const Description h = concave_combo(unit_ball(2), exp_sum_target());
  for (int s = 0; s < 1000; ++s) {
    const double t = ut(rng);
    const Eigen::MatrixXd H = h.eval(t, random_vector(2, 5.0, rng)).hess;
    EXPECT_LE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H).eigenvalues().maxCoeff(), -2 * (1 - t) + 1e-9);
  }
}

TEST(RzProduct, EndpointAndDoubleRoot) {
  const MultiPoly b = ball_poly(2);
  const Description h = rz_product_homotopy(b, normalized_symmetric_pk(2, 2));
  std::mt19937_64 rng(59);
  for (int s = 0; s < 10; ++s) {
    const Eigen::VectorXd x = random_vector(2, 2.0, rng);
    EXPECT_NEAR(h.value(0.0, x), b.eval(x), 1e-13);
  }
  const Description same = rz_product_homotopy(b, b, SmoothingSchedule{0.0});
  EXPECT_NEAR(same.value(0.5, Eigen::Vector2d(2, 0)), 0.0, 1e-14);
  EXPECT_NEAR(same.value(0.5, Eigen::Vector2d(0, 2)), 0.0, 1e-14);
  // with smoothing the double root splits; the value there is eps * dR[p-hat] = 0.0125 * 0 ...
  const Description smoothed = rz_product_homotopy(b, b);
  const auto e = smoothed.eval(0.5, Eigen::Vector2d(2, 0));
  EXPECT_GT(std::abs(e.value) + e.grad.norm(), 0.0);
}

TEST(RzProduct, ClosedFormValue) {
  // p0(u) p1(v) + eps [dR p0(u) p1(v) + p0(u) dR p1(v)] for two unit balls
  const MultiPoly b = ball_poly(2);
  const Description h = rz_product_homotopy(b, b);
  const Eigen::Vector2d x(0.7, -0.4);
  for (double t : {0.1, 0.5, 0.8}) {
    const double s2 = x.squaredNorm();
    const double pu = 1 - (1 - t) * (1 - t) * s2, pv = 1 - t * t * s2, eps = 0.05 * t * (1 - t);
    EXPECT_NEAR(h.value(t, x), pu * pv + eps * (2 * pv + 2 * pu), 1e-14);
  }
}

TEST(RzProduct, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(61);
  expect_fd_ok(rz_product_homotopy(ball_poly(2), normalized_symmetric_pk(2, 2)), rng, 1.5);
  expect_fd_ok(rz_product_homotopy(ball_poly(3), normalized_symmetric_pk(3, 2), SmoothingSchedule{0.05}, 2), rng, 1.0);
  expect_fd_ok(rz_product_homotopy(ball_poly(4), normalized_symmetric_pk(4, 3)), rng, 1.0, 30);
}

TEST(RzProduct, PreservesRealRootedness) {
  std::mt19937_64 rng(67);
  for (int n : {2, 3, 4}) {
    const Description h = rz_product_homotopy(ball_poly(n), normalized_symmetric_pk(n, 2));
    const MultiPoly b = ball_poly(n), pk = normalized_symmetric_pk(n, 2);
    for (int s = 0; s < 20; ++s) {
      const Eigen::VectorXd a = random_vector(n, 1.0, rng);
      for (int j = 1; j <= 9; ++j) {
        const double t = j / 10.0, eps = 0.05 * t * (1 - t);
        const MultiPoly hat = b.scaled_arguments(1 - t) * pk.scaled_arguments(t);
        const MultiPoly pt = smooth(hat, eps);
        EXPECT_NEAR(pt.eval(a), h.value(t, a), 1e-12 * (1 + std::abs(pt.eval(a))));
        EXPECT_TRUE(real_rooted(restrict(pt, a))) << "n=" << n << " t=" << t;
      }
    }
  }
}

TEST(RzProduct, RejectsBadInput) {
  EXPECT_THROW(rz_product_homotopy(ball_poly(2), -1.0 * ball_poly(2)), std::invalid_argument);
  EXPECT_THROW(rz_product_homotopy(ball_poly(2), ball_poly(3)), std::invalid_argument);
  EXPECT_THROW(rz_product_homotopy(ball_poly(2), ball_poly(2), SmoothingSchedule{}, 0), std::invalid_argument);
}

TEST(KEllipse, Examples) {
  const Description circle = k_ellipse({Eigen::Vector2d(0, 0)}, 2.0);
  EXPECT_NEAR(circle.value(0, Eigen::Vector2d(2, 0)), 0.0, 1e-15);
  const EllipseInstance e = three_ellipse_instance();
  const Description three = k_ellipse(e.focal_points, e.r);
  EXPECT_DOUBLE_EQ(three.value(0, Eigen::Vector2d::Zero()), 2.0);
  EXPECT_THROW(three.eval(0, Eigen::Vector2d(2, 0)), SingularEvaluation);
  EXPECT_THROW(three.eval(0, Eigen::Vector2d(6, 5e-10)), SingularEvaluation);
  std::mt19937_64 rng(71);
  expect_fd_ok(three, rng, 8.0);
  std::mt19937_64 r2(5);
  const EllipseInstance rnd = random_ellipse_instance(10, 4, r2);
  const Description d4 = k_ellipse(rnd.focal_points, rnd.r);
  double expect = rnd.r;
  for (const auto& u : rnd.focal_points) expect -= u.norm();
  EXPECT_EQ(d4.value(0, Eigen::VectorXd::Zero(4)), expect);
  expect_fd_ok(d4, rng, 3.0);
}

TEST(PnormBall, Examples) {
  std::mt19937_64 rng(73);
  const Description p2 = pnorm_ball(2, 1.5, 3);
  for (int s = 0; s < 10; ++s) {
    const Eigen::VectorXd x = random_vector(3, 2.0, rng);
    EXPECT_NEAR(p2.value(0, x), 2.25 - x.squaredNorm(), 1e-14);
  }
  const Description p8 = pnorm_ball(8, 1.0, 4);
  EXPECT_DOUBLE_EQ(p8.value(0, Eigen::Vector4d(1, 0, 0, 0)), 0.0);
  EXPECT_DOUBLE_EQ(pnorm_ball(8, 1.0, 2).value(0, Eigen::Vector2d(0.5, 0.5)), 127.0 / 128.0);
  expect_fd_ok(p8, rng, 1.0);
  EXPECT_THROW(pnorm_ball(3, 1.0, 2), std::invalid_argument);
  EXPECT_THROW(pnorm_ball(0, 1.0, 2), std::invalid_argument);
  EXPECT_THROW(pnorm_ball(8, -1.0, 2), std::invalid_argument);
}

TEST(GeometricConstraint, Examples) {
  std::vector<Eigen::VectorXd> b{Eigen::Vector2d(1, 0)};
  const Description one = geometric_constraint({1}, b, {0}, 2.0);
  EXPECT_NEAR(one.value(0, Eigen::Vector2d(std::log(2.0), 5.0)), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(exp_sum_target().value(0, Eigen::Vector2d::Zero()), 6.0);
  std::mt19937_64 rng(79);
  for (int s = 0; s < 100; ++s) {
    const Eigen::MatrixXd H = exp_sum_target().eval(0, random_vector(2, 10.0, rng)).hess;
    EXPECT_LE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H).eigenvalues().maxCoeff(), 1e-10);
  }
  expect_fd_ok(exp_sum_target(), rng, 5.0);
  EXPECT_THROW(geometric_constraint({1}, b, {0}, 0.5), std::invalid_argument);
  EXPECT_THROW(geometric_constraint({-1}, b, {0}, 2.0), std::invalid_argument);
}

TEST(LogSumExp, ValueAndDerivatives) {
  std::vector<Eigen::VectorXd> b{Eigen::Vector2d(2, 2), Eigen::Vector2d(-1.6, 1.6), Eigen::Vector2d(-0.6, 1.2),
                                 Eigen::Vector2d(0, -1.2)};
  const Description d = log_sum_exp_constraint({1, 1, 1, 1}, b, {0, 0, 0, 0}, 5.0);
  EXPECT_NEAR(d.value(0, Eigen::Vector2d::Zero()), 5.0 - std::log(4.0), 1e-14);
  const Eigen::Vector2d y(-6, 2.5);
  double s = 0;
  for (const auto& bk : b) s += std::exp(bk.dot(y));
  EXPECT_NEAR(d.value(0, y), 5.0 - std::log(s), 1e-12);
  EXPECT_LT(d.value(0, y), 0.0);
  // large arguments stay finite
  EXPECT_TRUE(std::isfinite(d.value(0, Eigen::Vector2d(400, 400))));
  std::mt19937_64 rng(83);
  expect_fd_ok(d, rng, 3.0);
}

TEST(PencilHomotopy, Examples) {
  const PencilPair pp = failing_pencil_pair();
  const Description d = pencil_homotopy(pp.a, pp.b);
  std::mt19937_64 rng(89);
  for (int s = 0; s < 20; ++s) {
    const Eigen::VectorXd x = random_vector(2, 2.0, rng);
    EXPECT_NEAR(d.value(0.0, x), 1 - x.squaredNorm(), 1e-13);
    EXPECT_NEAR(d.value(1.0, x), 1 - x.squaredNorm(), 1e-13);
    const double s2 = x(0) + x(1);
    EXPECT_NEAR(d.value(0.5, x), 1 - s2 * s2 / 2, 1e-13);
  }
  EXPECT_NEAR(d.value(0.5, Eigen::Vector2d(std::sqrt(2.0), 0)), 0.0, 1e-14);
  expect_fd_ok(d, rng, 1.5);
  MatrixPencil small{1, {Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Ones(1, 1)}};
  EXPECT_THROW(pencil_homotopy(pp.a, small), std::invalid_argument);
}

TEST(TimePolynomial, DerivativesMatchFiniteDifferences) {
  // (1 + t)^2 - |x|^2 in variables (x1, x2, t)
  const int m = 3;
  const MultiPoly t = MultiPoly::variable(m, 2);
  const MultiPoly one = MultiPoly::constant(m, 1.0);
  MultiPoly p = (one + t) * (one + t);
  for (int i = 0; i < 2; ++i) p = p - MultiPoly::variable(m, i) * MultiPoly::variable(m, i);
  const Description d = time_polynomial(p);
  EXPECT_EQ(d.n_vars(), 2);
  const auto e = d.eval(0.5, Eigen::Vector2d(1, 0));
  EXPECT_DOUBLE_EQ(e.value, 1.25);
  EXPECT_DOUBLE_EQ(e.dt_value, 3.0);
  std::mt19937_64 rng(97);
  expect_fd_ok(d, rng, 2.0);
}

TEST(Description, RejectsNonFiniteTime) {
  EXPECT_THROW(unit_ball(2).eval(std::nan(""), Eigen::Vector2d::Zero()), std::invalid_argument);
}

TEST(PencilHomotopy, MatchesExpandedPolynomialOnRandomPencils) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const int s = 1 + trial % 4, n = 1 + trial % 3;
    MatrixPencil A{s, {}}, B{s, {}};
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXd u = Eigen::MatrixXd::Random(s, s), v = Eigen::MatrixXd::Random(s, s);
      A.matrices.push_back(0.5 * (u + u.transpose()));
      B.matrices.push_back(0.5 * (v + v.transpose()));
    }
    const Description d = pencil_homotopy(A, B);
    const Description expanded = time_polynomial(pencil_homotopy_polynomial(A, B));
    std::uniform_real_distribution<double> ut(0, 1);
    for (int k = 0; k < 10; ++k) {
      const double t = ut(rng);
      const Eigen::VectorXd x = random_vector(n, 1.0, rng);
      const auto e1 = d.eval(t, x), e2 = expanded.eval(t, x);
      EXPECT_NEAR(e1.value, e2.value, 1e-12);
      EXPECT_NEAR(d.value(t, x), e2.value, 1e-12);
      EXPECT_LT(homotopt::testing::rel_err(e1.grad, e2.grad), 1e-12);
      EXPECT_LT(homotopt::testing::rel_err(e1.hess, e2.hess), 1e-12);
      EXPECT_NEAR(e1.dt_value, e2.dt_value, 1e-12);
      EXPECT_LT(homotopt::testing::rel_err(e1.dt_grad, e2.dt_grad), 1e-12);
    }
  }
}

TEST(PencilHomotopy, AccurateFarFromOrigin) {
  // Along the strip direction at t near 1/2 the matrix entries stay O(1).
  const PencilPair pp = failing_pencil_pair();
  const Description d = pencil_homotopy(pp.a, pp.b);
  const double t = 0.5 - 1e-6;
  const Eigen::Vector2d x(3e5, -3e5);
  // det = 1 - ((1 - 2t) (x1 - x2))^2 / 2 along x1 = -x2 for this pair
  const double c = (1 - 2 * t) * (x(0) - x(1));
  EXPECT_NEAR(d.value(t, x), 1 - c * c / 2, 1e-9);
  EXPECT_NEAR(d.eval(t, x).value, 1 - c * c / 2, 1e-9);
}
