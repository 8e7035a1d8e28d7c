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

#ifndef HOMOTOPT_ERRORS_HPP
#define HOMOTOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homotopt {

/// Raised by evaluators at points where the description or objective is not
/// differentiable (focal points, distance centres).
class SingularEvaluation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the stationarity matrix K is numerically singular.
class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix(const std::string& what, double t, double condition)
      : std::runtime_error(what), t_(t), condition_(condition) {}
  double t() const { return t_; }
  double condition() const { return condition_; }

 private:
  double t_;
  double condition_;
};

}  // namespace homotopt

#endif  // HOMOTOPT_ERRORS_HPP
