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
#include "homotopt/objectives.hpp"

#include <cmath>
#include <stdexcept>

#include "homotopt/errors.hpp"

namespace homotopt {

Objective::Objective(int n_vars, std::string label, bool time_dependent, JetFn jet,
                     std::optional<Eigen::VectorXd> linear_weight, std::optional<Eigen::VectorXd> start_weight)
    : n_vars_(n_vars), label_(std::move(label)), time_dependent_(time_dependent), jet_(std::move(jet)),
      linear_weight_(std::move(linear_weight)), start_weight_(std::move(start_weight)) {
  if (n_vars < 1) throw std::invalid_argument("Objective: n_vars must be positive");
  if (!jet_) throw std::invalid_argument("Objective: missing evaluator");
  if (linear_weight_ && !start_weight_) start_weight_ = linear_weight_;
}

ObjectiveEval Objective::eval(double t, const Eigen::VectorXd& x) const {
  if (x.size() != n_vars_)
    throw std::invalid_argument(label_ + ": point has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(n_vars_));
  return jet_(t, x);
}

Objective linear(const Eigen::VectorXd& w) {
  if (w.size() < 1 || w.isZero(0.0) || !w.allFinite())
    throw std::invalid_argument("linear: weight vector must be nonzero and finite");
  const int n = static_cast<int>(w.size());
  auto jet = [w, n](double, const Eigen::VectorXd& x) {
    ObjectiveEval e = ObjectiveEval::zero(n);
    e.value = w.dot(x);
    e.grad = w;
    return e;
  };
  return Objective(n, "linear", false, jet, w);
}

Objective negative_distance(const Eigen::VectorXd& y) {
  if (y.size() < 1) throw std::invalid_argument("negative_distance: empty centre");
  const int n = static_cast<int>(y.size());
  auto jet = [y, n](double, const Eigen::VectorXd& x) {
    const Eigen::VectorXd d = x - y;
    const double len = d.norm();
    if (len < kDistanceGuard) throw SingularEvaluation("negative_distance: evaluation at the centre");
    const Eigen::VectorXd w = d / len;
    ObjectiveEval e = ObjectiveEval::zero(n);
    e.value = -len;
    e.grad = -w;
    e.hess = -(Eigen::MatrixXd::Identity(n, n) - w * w.transpose()) / len;
    return e;
  };
  return Objective(n, "negative_distance", false, jet);
}

Objective objective_homotopy(const Objective& f0, const Objective& f1) {
  if (f0.n_vars() != f1.n_vars()) throw std::invalid_argument("objective_homotopy: dimension mismatch");
  auto jet = [f0, f1](double t, const Eigen::VectorXd& x) { return blend(f0.eval(t, x), f1.eval(t, x), t); };
  return Objective(f0.n_vars(), "homotopy(" + f0.label() + ", " + f1.label() + ")", true, jet, std::nullopt,
                   f0.start_weight());
}

}  // namespace homotopt
