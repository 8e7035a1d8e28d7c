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
#include "homotopt/point_eval.hpp"

namespace homotopt {

PointEval PointEval::zero(Eigen::Index n) { return constant(n, 0.0); }

PointEval PointEval::constant(Eigen::Index n, double c) {
  PointEval e;
  e.value = c;
  e.grad = Eigen::VectorXd::Zero(n);
  e.hess = Eigen::MatrixXd::Zero(n, n);
  e.dt_value = 0.0;
  e.dt_grad = Eigen::VectorXd::Zero(n);
  return e;
}

PointEval& PointEval::operator+=(const PointEval& o) {
  value += o.value;
  grad += o.grad;
  hess += o.hess;
  dt_value += o.dt_value;
  dt_grad += o.dt_grad;
  return *this;
}

PointEval& PointEval::operator*=(double c) {
  value *= c;
  grad *= c;
  hess *= c;
  dt_value *= c;
  dt_grad *= c;
  return *this;
}

PointEval operator+(PointEval a, const PointEval& b) { return a += b; }
PointEval operator-(PointEval a, const PointEval& b) { return a += (-1.0) * b; }
PointEval operator*(double c, PointEval a) { return a *= c; }

PointEval product(const PointEval& a, const PointEval& b) {
  PointEval r;
  r.value = a.value * b.value;
  r.grad = a.value * b.grad + b.value * a.grad;
  r.hess = a.value * b.hess + b.value * a.hess + a.grad * b.grad.transpose() + b.grad * a.grad.transpose();
  r.dt_value = a.dt_value * b.value + a.value * b.dt_value;
  r.dt_grad = a.dt_grad * b.value + a.grad * b.dt_value + a.dt_value * b.grad + a.value * b.dt_grad;
  return r;
}

PointEval scale_by_time_function(const PointEval& a, double c, double dc) {
  PointEval r;
  r.value = c * a.value;
  r.grad = c * a.grad;
  r.hess = c * a.hess;
  r.dt_value = dc * a.value + c * a.dt_value;
  r.dt_grad = dc * a.grad + c * a.dt_grad;
  return r;
}

PointEval blend(const PointEval& a, const PointEval& b, double t) {
  return scale_by_time_function(a, 1.0 - t, -1.0) + scale_by_time_function(b, t, 1.0);
}

}  // namespace homotopt
