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
#ifndef HOMOTOPT_DESCRIPTIONS_HPP
#define HOMOTOPT_DESCRIPTIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "homotopt/point_eval.hpp"
#include "homotopt/poly.hpp"

namespace homotopt {

/// A homotopy of smooth descriptions (t, x) -> p_t(x) for t in [0, 1].
///
/// The feasible set at time t is the connected piece of {p_t >= 0} around the
/// origin. Descriptions are immutable and cheap to copy; evaluation is
/// thread-safe. Evaluators may throw SingularEvaluation at documented
/// non-differentiable points.
class Description {
 public:
  using JetFn = std::function<DescriptionEval(double t, const Eigen::VectorXd& x)>;
  using ValueFn = std::function<double(double t, const Eigen::VectorXd& x)>;

  Description(int n_vars, std::string label, bool time_dependent, JetFn jet, ValueFn value = {});

  int n_vars() const { return n_vars_; }
  const std::string& label() const { return label_; }
  /// False for static descriptions, whose time derivatives vanish.
  bool time_dependent() const { return time_dependent_; }

  DescriptionEval eval(double t, const Eigen::VectorXd& x) const;
  DescriptionEval operator()(double t, const Eigen::VectorXd& x) const { return eval(t, x); }
  /// p_t(x) only; avoids derivative work where the description supports it.
  double value(double t, const Eigen::VectorXd& x) const;

 private:
  void check(double t, const Eigen::VectorXd& x) const;

  int n_vars_;
  std::string label_;
  bool time_dependent_;
  JetFn jet_;
  ValueFn value_;
};

/// eps(t) = eps_max * t * (1 - t).
struct SmoothingSchedule {
  double eps_max = 0.05;
  double operator()(double t) const { return eps_max * t * (1.0 - t); }
  double derivative(double t) const { return eps_max * (1.0 - 2.0 * t); }
};

/// 1 - ||x||^2.
Description unit_ball(int n);

/// (1 - t) p0 + t p1. Requires p0 and p1 positive at the origin.
Description concave_combo(const Description& p0, const Description& p1);

/// Smoothed product homotopy between real zero polynomials:
/// p_t = F_eps(t)^repeat [ p0((1-t)x) p1(tx) ] with F_eps[p] = p + eps dR p.
Description rz_product_homotopy(const MultiPoly& p0, const MultiPoly& p1, SmoothingSchedule schedule = {},
                                int repeat = 1);

/// r - sum_i ||x - u_i||. Throws SingularEvaluation within 1e-9 of a focal point.
Description k_ellipse(const std::vector<Eigen::VectorXd>& focal_points, double r);
inline constexpr double kFocalGuard = 1e-9;

/// r^p - sum_i x_i^p for even integer p >= 2.
Description pnorm_ball(int p, double r, int n);

/// level - sum_k c_k exp(b_k . x + a_k).
Description geometric_constraint(const std::vector<double>& c, const std::vector<Eigen::VectorXd>& b,
                                 const std::vector<double>& a, double level);

/// level - log sum_k c_k exp(b_k . x + a_k).
Description log_sum_exp_constraint(const std::vector<double>& c, const std::vector<Eigen::VectorXd>& b,
                                   const std::vector<double>& a, double level);

/// A static polynomial description.
Description polynomial_description(const MultiPoly& p, std::string label = "polynomial");

/// P(x, t) given as a polynomial in n+1 variables with t last.
Description time_polynomial(const MultiPoly& p_xt, std::string label = "time_polynomial");

/// det((1 - t) A(x) + t B(x)).
Description pencil_homotopy(const MatrixPencil& a, const MatrixPencil& b);
MultiPoly pencil_homotopy_polynomial(const MatrixPencil& a, const MatrixPencil& b);

}  // namespace homotopt

#endif  // HOMOTOPT_DESCRIPTIONS_HPP
