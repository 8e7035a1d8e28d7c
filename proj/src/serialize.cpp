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
#include "homotopt/serialize.hpp"

#include <cmath>

namespace homotopt {

using nlohmann::json;

namespace {

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError("field '" + where + "': expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field '" + join(where, key) + "'");
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError("field '" + where + "': expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError("field '" + where + "': not finite");
  return v;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError("field '" + where + "': expected an integer");
  return j.get<int>();
}

double num(const json& j, const std::string& key, const std::string& where) {
  return as_number(field(j, key, where), join(where, key));
}

int integer(const json& j, const std::string& key, const std::string& where) {
  return as_int(field(j, key, where), join(where, key));
}

double num_or(const json& j, const std::string& key, const std::string& where, double dflt) {
  return j.contains(key) ? num(j, key, where) : dflt;
}

int int_or(const json& j, const std::string& key, const std::string& where, int dflt) {
  return j.contains(key) ? integer(j, key, where) : dflt;
}

Eigen::VectorXd as_vector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError("field '" + where + "': expected a nonempty array of numbers");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = as_number(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Eigen::VectorXd vec(const json& j, const std::string& key, const std::string& where) {
  return as_vector(field(j, key, where), join(where, key));
}

std::vector<double> dvec(const json& j, const std::string& key, const std::string& where) {
  const Eigen::VectorXd v = vec(j, key, where);
  return {v.data(), v.data() + v.size()};
}

std::vector<Eigen::VectorXd> vec_list(const json& j, const std::string& key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array() || a.empty()) throw InputError("field '" + join(where, key) + "': expected a nonempty array");
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(as_vector(a[i], join(where, key) + "[" + std::to_string(i) + "]"));
  for (const auto& v : out)
    if (v.size() != out.front().size())
      throw InputError("field '" + join(where, key) + "': vectors of different lengths");
  return out;
}

Eigen::MatrixXd as_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError("field '" + where + "': expected a matrix (array of rows)");
  const std::size_t rows = j.size();
  Eigen::MatrixXd m;
  for (std::size_t r = 0; r < rows; ++r) {
    const Eigen::VectorXd row = as_vector(j[r], where + "[" + std::to_string(r) + "]");
    if (r == 0) m.resize(static_cast<Eigen::Index>(rows), row.size());
    if (row.size() != m.cols()) throw InputError("field '" + where + "': ragged rows");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

MatrixPencil pencil_from_json(const json& j, const std::string& where) {
  MatrixPencil p;
  const json& mats = field(j, "matrices", where);
  if (!mats.is_array() || mats.empty()) throw InputError("field '" + join(where, "matrices") + "': expected a nonempty array");
  for (std::size_t i = 0; i < mats.size(); ++i)
    p.matrices.push_back(as_matrix(mats[i], join(where, "matrices") + "[" + std::to_string(i) + "]"));
  p.size = j.contains("size") ? integer(j, "size", where) : static_cast<int>(p.matrices.front().rows());
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError("field '" + where + "': " + e.what());
  }
  return p;
}

std::string kind_of(const json& j, const std::string& where) {
  const json& k = field(j, "kind", where);
  if (!k.is_string()) throw InputError("field '" + join(where, "kind") + "': expected a string");
  return k.get<std::string>();
}

// Wraps constructor validation failures so they name the field.
template <class F>
auto build(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError("field '" + where + "': " + e.what());
  }
}

json vec_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"exp", t.exp}, {"coeff", t.coeff}});
  return {{"n_vars", p.n_vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j, const std::string& where) {
  const int n = integer(j, "n_vars", where);
  if (n < 1) throw InputError("field '" + join(where, "n_vars") + "': must be positive");
  const json& ts = field(j, "terms", where);
  if (!ts.is_array()) throw InputError("field '" + join(where, "terms") + "': expected an array");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string w = join(where, "terms") + "[" + std::to_string(i) + "]";
    const json& e = field(ts[i], "exp", w);
    if (!e.is_array() || static_cast<int>(e.size()) != n)
      throw InputError("field '" + w + ".exp': expected " + std::to_string(n) + " exponents");
    Exponent ex;
    for (std::size_t v = 0; v < e.size(); ++v) {
      const int d = as_int(e[v], w + ".exp[" + std::to_string(v) + "]");
      if (d < 0) throw InputError("field '" + w + ".exp': negative exponent");
      ex.push_back(d);
    }
    terms.push_back({ex, num(ts[i], "coeff", w)});
  }
  return build(where, [&] { return MultiPoly(n, terms); });
}

Description description_from_json(const json& j, const std::string& where) {
  const std::string kind = kind_of(j, where);
  return build(where, [&]() -> Description {
    if (kind == "unit_ball") return unit_ball(integer(j, "n", where));
    if (kind == "pnorm_ball") return pnorm_ball(integer(j, "p", where), num(j, "r", where), integer(j, "n", where));
    if (kind == "k_ellipse") return k_ellipse(vec_list(j, "focal_points", where), num(j, "r", where));
    if (kind == "geometric" || kind == "log_sum_exp") {
      const auto b = vec_list(j, "b", where);
      const std::vector<double> c = j.contains("c") ? dvec(j, "c", where) : std::vector<double>(b.size(), 1.0);
      const std::vector<double> a = j.contains("a") ? dvec(j, "a", where) : std::vector<double>(b.size(), 0.0);
      const double level = num(j, "level", where);
      return kind == "geometric" ? geometric_constraint(c, b, a, level) : log_sum_exp_constraint(c, b, a, level);
    }
    if (kind == "polynomial") return polynomial_description(poly_from_json(field(j, "poly", where), join(where, "poly")));
    if (kind == "time_polynomial")
      return time_polynomial(poly_from_json(field(j, "poly", where), join(where, "poly")));
    if (kind == "concave_combo")
      return concave_combo(description_from_json(field(j, "p0", where), join(where, "p0")),
                           description_from_json(field(j, "p1", where), join(where, "p1")));
    if (kind == "rz_product")
      return rz_product_homotopy(poly_from_json(field(j, "p0", where), join(where, "p0")),
                                 poly_from_json(field(j, "p1", where), join(where, "p1")),
                                 SmoothingSchedule{num_or(j, "eps_max", where, 0.05)}, int_or(j, "repeat", where, 1));
    if (kind == "pencil_homotopy")
      return pencil_homotopy(pencil_from_json(field(j, "a", where), join(where, "a")),
                             pencil_from_json(field(j, "b", where), join(where, "b")));
    throw InputError("field '" + join(where, "kind") + "': unknown description kind '" + kind + "'");
  });
}

Objective objective_from_json(const json& j, const std::string& where) {
  const std::string kind = kind_of(j, where);
  return build(where, [&]() -> Objective {
    if (kind == "linear") return linear(vec(j, "w", where));
    if (kind == "negative_distance") return negative_distance(vec(j, "y", where));
    if (kind == "homotopy")
      return objective_homotopy(objective_from_json(field(j, "f0", where), join(where, "f0")),
                                objective_from_json(field(j, "f1", where), join(where, "f1")));
    throw InputError("field '" + join(where, "kind") + "': unknown objective kind '" + kind + "'");
  });
}

namespace {

TrackerOptions options_from_json(const json& j) {
  TrackerOptions o;
  const std::string w = "options";
  if (!j.is_object()) throw InputError("field 'options': expected an object");
  o.rk_tolerance = num_or(j, "rk_tolerance", w, o.rk_tolerance);
  o.corrector_tolerance = num_or(j, "corrector_tolerance", w, o.corrector_tolerance);
  o.max_corrector_iters = int_or(j, "max_corrector_iters", w, o.max_corrector_iters);
  o.min_step = num_or(j, "min_step", w, o.min_step);
  o.max_step = num_or(j, "max_step", w, o.max_step);
  o.divergence_radius = num_or(j, "divergence_radius", w, o.divergence_radius);
  o.end_tolerance = num_or(j, "end_tolerance", w, o.end_tolerance);
  build(w, [&] {
    o.validate();
    return 0;
  });
  return o;
}

Problem named_problem(const json& j) {
  const json& name_j = field(j, "problem", "");
  if (!name_j.is_string()) throw InputError("field 'problem': expected a string");
  const std::string name = name_j.get<std::string>();
  const std::string w = "";
  auto key = [&](const char* k) { return std::string(k); };
  return build("problem", [&]() -> Problem {
    if (name == "pnorm")
      return pnorm_problem(integer(j, "p", w), num(j, "r", w), integer(j, "n", w), vec(j, key("w"), w));
    if (name == "ellipse") return ellipse_problem(vec_list(j, "focal_points", w), num(j, "r", w), vec(j, "w", w));
    if (name == "geometric") {
      const auto b = vec_list(j, "b", w);
      const std::vector<double> c = j.contains("c") ? dvec(j, "c", w) : std::vector<double>(b.size(), 1.0);
      const std::vector<double> a = j.contains("a") ? dvec(j, "a", w) : std::vector<double>(b.size(), 0.0);
      return geometric_problem(c, b, a, num(j, "level", w), vec(j, "w", w));
    }
    if (name == "symmetric")
      return hyperbolic_symmetric(integer(j, "n", w), integer(j, "k", w), vec(j, "w", w),
                                  num_or(j, "eps_max", w, 0.05), int_or(j, "repeat", w, 1));
    if (name == "distance")
      return distance_problem(description_from_json(field(j, "description", w), "description"), vec(j, "y", w),
                              vec(j, "w0", w));
    if (name == "failing-pencil") return failing_pencil_problem(vec(j, "w", w));
    throw InputError("field 'problem': unknown problem '" + name + "'");
  });
}

}  // namespace

ProblemInput problem_from_json(const json& j) {
  if (!j.is_object()) throw InputError("problem file: expected a JSON object");
  ProblemInput in{j.contains("problem") ? named_problem(j) : [&] {
    Description d = description_from_json(field(j, "description", ""), "description");
    Objective f = objective_from_json(field(j, "objective", ""), "objective");
    if (d.n_vars() != f.n_vars()) throw InputError("field 'objective': dimension differs from the description");
    Eigen::VectorXd x0;
    if (j.contains("x0")) {
      x0 = vec(j, "x0", "");
      if (x0.size() != d.n_vars()) throw InputError("field 'x0': wrong dimension");
    } else if (f.start_weight()) {
      x0 = initial_point_unit_ball(*f.start_weight());
    } else {
      throw InputError("missing field 'x0' (objective has no linear start direction)");
    }
    return Problem{"custom", std::move(d), std::move(f), std::move(x0)};
  }(), TrackerOptions{}};
  if (j.contains("options")) in.options = options_from_json(j["options"]);
  return in;
}

json options_to_json(const TrackerOptions& o) {
  return {{"rk_tolerance", o.rk_tolerance},       {"corrector_tolerance", o.corrector_tolerance},
          {"max_corrector_iters", o.max_corrector_iters}, {"min_step", o.min_step},
          {"max_step", o.max_step},               {"divergence_radius", o.divergence_radius},
          {"end_tolerance", o.end_tolerance}};
}

json report_to_json(const SolveReport& r, bool include_path) {
  const auto& s = r.corrector_stats;
  json out = {
      {"status", to_string(r.status)},
      {"final_t", r.final_t},
      {"final_point", vec_json(r.final_point)},
      {"final_value", r.final_value},
      {"final_kkt_residual", r.final_kkt_residual},
      {"step_count", r.step_count},
      {"final_pivot", r.final_pivot},
      {"corrector_stats",
       {{"accepted_steps", s.accepted_steps},
        {"rejected_steps", s.rejected_steps},
        {"newton_iterations", s.newton_iterations},
        {"max_newton_iterations", s.max_newton_iterations},
        {"pivot_switches", s.pivot_switches},
        {"singular_retries", s.singular_retries},
        {"max_abs_p", s.max_abs_p},
        {"max_abs_q", s.max_abs_q},
        {"endpoint_iterations", s.endpoint_iterations},
        {"limit_point", s.limit_point}}},
      {"diagnostics", r.diagnostics},
  };
  if (include_path) {
    json path = json::array();
    for (const auto& p : r.path) path.push_back({{"t", p.t}, {"x", vec_json(p.x)}});
    out["path"] = path;
  }
  return out;
}

}  // namespace homotopt
