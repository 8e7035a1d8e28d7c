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
#ifndef HOMOTOPT_OBJECTIVES_HPP
#define HOMOTOPT_OBJECTIVES_HPP

#include <functional>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "homotopt/point_eval.hpp"

namespace homotopt {

/// A (possibly time-dependent) concave objective (t, x) -> f_t(x) to maximize.
class Objective {
 public:
  using JetFn = std::function<ObjectiveEval(double t, const Eigen::VectorXd& x)>;

  Objective(int n_vars, std::string label, bool time_dependent, JetFn jet,
            std::optional<Eigen::VectorXd> linear_weight = std::nullopt,
            std::optional<Eigen::VectorXd> start_weight = std::nullopt);

  int n_vars() const { return n_vars_; }
  const std::string& label() const { return label_; }
  bool time_dependent() const { return time_dependent_; }
  bool is_linear() const { return linear_weight_.has_value(); }
  /// w for f(x) = w . x, if the objective is linear.
  const std::optional<Eigen::VectorXd>& linear_weight() const { return linear_weight_; }
  /// w of the linear objective at t = 0, used to place the start point on the unit ball.
  const std::optional<Eigen::VectorXd>& start_weight() const { return start_weight_; }

  ObjectiveEval eval(double t, const Eigen::VectorXd& x) const;
  ObjectiveEval operator()(double t, const Eigen::VectorXd& x) const { return eval(t, x); }
  double value(double t, const Eigen::VectorXd& x) const { return eval(t, x).value; }

 private:
  int n_vars_;
  std::string label_;
  bool time_dependent_;
  JetFn jet_;
  std::optional<Eigen::VectorXd> linear_weight_;
  std::optional<Eigen::VectorXd> start_weight_;
};

Objective linear(const Eigen::VectorXd& w);

/// -||x - y||. Throws SingularEvaluation within 1e-9 of y.
Objective negative_distance(const Eigen::VectorXd& y);
inline constexpr double kDistanceGuard = 1e-9;

/// (1 - t) f0 + t f1.
Objective objective_homotopy(const Objective& f0, const Objective& f1);

}  // namespace homotopt

#endif  // HOMOTOPT_OBJECTIVES_HPP
