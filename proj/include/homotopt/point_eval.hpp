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
#ifndef HOMOTOPT_POINT_EVAL_HPP
#define HOMOTOPT_POINT_EVAL_HPP

#include <Eigen/Dense>

namespace homotopt {

/// Value and derivatives of a time-dependent function (t, x) -> g_t(x) at one
/// point: g, grad_x g, Hess_x g, d/dt g and d/dt grad_x g.
struct PointEval {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
  double dt_value = 0.0;
  Eigen::VectorXd dt_grad;

  static PointEval zero(Eigen::Index n);
  static PointEval constant(Eigen::Index n, double c);

  Eigen::Index dim() const { return grad.size(); }

  PointEval& operator+=(const PointEval& o);
  PointEval& operator*=(double c);
};

using DescriptionEval = PointEval;
using ObjectiveEval = PointEval;

PointEval operator+(PointEval a, const PointEval& b);
PointEval operator-(PointEval a, const PointEval& b);
PointEval operator*(double c, PointEval a);

/// Product rule for all five fields.
PointEval product(const PointEval& a, const PointEval& b);

/// c(t) * a, with c' = dc/dt.
PointEval scale_by_time_function(const PointEval& a, double c, double dc);

/// Convex combination (1 - t) a + t b, including the explicit t-dependence of
/// the weights in the time derivatives.
PointEval blend(const PointEval& a, const PointEval& b, double t);

}  // namespace homotopt

#endif  // HOMOTOPT_POINT_EVAL_HPP
