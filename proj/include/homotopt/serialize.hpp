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
#ifndef HOMOTOPT_SERIALIZE_HPP
#define HOMOTOPT_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "homotopt/descriptions.hpp"
#include "homotopt/objectives.hpp"
#include "homotopt/poly.hpp"
#include "homotopt/problems.hpp"
#include "homotopt/tracker.hpp"

namespace homotopt {

/// Malformed problem input. The message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n_vars": n, "terms": [{"exp": [...], "coeff": c}, ...]}
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, const std::string& where = "poly");

/// {"kind": ..., ...}; kinds: unit_ball, pnorm_ball, k_ellipse, geometric,
/// log_sum_exp, polynomial, time_polynomial, concave_combo, rz_product, pencil_homotopy.
Description description_from_json(const nlohmann::json& j, const std::string& where = "description");

/// kinds: linear, negative_distance, homotopy.
Objective objective_from_json(const nlohmann::json& j, const std::string& where = "objective");

struct ProblemInput {
  Problem problem;
  TrackerOptions options;
};

/// Either {"problem": name, ...parameters} with name in pnorm, ellipse,
/// geometric, symmetric, distance, failing-pencil; or
/// {"description": {...}, "objective": {...}, "x0": [...]}. An optional
/// "options" object overrides tracker fields.
ProblemInput problem_from_json(const nlohmann::json& j);

nlohmann::json options_to_json(const TrackerOptions& o);
nlohmann::json report_to_json(const SolveReport& r, bool include_path = true);

}  // namespace homotopt

#endif  // HOMOTOPT_SERIALIZE_HPP
