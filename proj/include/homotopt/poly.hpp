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

#ifndef HOMOTOPT_POLY_HPP
#define HOMOTOPT_POLY_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace homotopt {

using Exponent = std::vector<int>;

struct Term {
  Exponent exp;
  double coeff = 0.0;
};

/// Value, gradient and Hessian of a polynomial at one point.
struct PolyJet {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

/// Sparse multivariate polynomial with real coefficients.
///
/// Terms are kept sorted by exponent vector with like terms combined. After
/// every arithmetic operation, coefficients below 1e-14 times the largest
/// magnitude are dropped, so no stored coefficient is exactly zero.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int n_vars);
  MultiPoly(int n_vars, std::vector<Term> terms);

  static MultiPoly constant(int n_vars, double c);
  static MultiPoly variable(int n_vars, int index, double coeff = 1.0);

  int n_vars() const { return n_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximum total degree over stored terms; 0 for the zero polynomial.
  int degree() const { return degree_; }
  bool is_homogeneous() const;
  double coeff(const Exponent& e) const;

  double eval(const Eigen::VectorXd& x) const;
  Eigen::VectorXd grad(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const;
  PolyJet jet(const Eigen::VectorXd& x) const;

  /// Jets of the homogeneous components, indexed by total degree
  /// (size degree()+1). Any combination sum_j w(j) * p_j can be formed from
  /// these without another pass over the terms.
  std::vector<PolyJet> jets_by_degree(const Eigen::VectorXd& x) const;

  /// Symbolic partial derivative with respect to variable i.
  MultiPoly partial(int i) const;
  /// The polynomial x -> p(c x).
  MultiPoly scaled_arguments(double c) const;
  /// Multiplies each coefficient by w(total degree of its term).
  template <class F>
  MultiPoly map_by_degree(F&& w) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exp, t.coeff * w(total_degree(t.exp))});
    return MultiPoly(n_vars_, std::move(out));
  }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(double c, const MultiPoly& p);

  static int total_degree(const Exponent& e);

 private:
  void canonicalize();
  void build_index();
  void check_point(const Eigen::VectorXd& x) const;
  template <class Sink>
  void for_each_term_jet(const Eigen::VectorXd& x, bool second_order, Sink&& sink) const;

  int n_vars_ = 0;
  int degree_ = 0;
  std::vector<Term> terms_;
  // Flattened (variable, exponent) pairs of each term's nonzero exponents.
  std::vector<int> active_var_;
  std::vector<int> active_exp_;
  std::vector<int> active_offset_;
  std::vector<int> max_exp_;
};

/// Univariate polynomial, coefficients in ascending degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  double eval(double s) const;

 private:
  std::vector<double> coeffs_;
};

/// A(x) = I_s + x_1 A_1 + ... + x_n A_n with symmetric A_i.
struct MatrixPencil {
  int size = 0;
  std::vector<Eigen::MatrixXd> matrices;

  int n_vars() const { return static_cast<int>(matrices.size()); }
  /// Throws std::invalid_argument on size mismatch or asymmetry above 1e-12.
  void validate() const;
};

inline constexpr int kMaxPencilSize = 8;
inline constexpr int kMaxPencilVars = 8;

double eval(const MultiPoly& p, const Eigen::VectorXd& x);
Eigen::VectorXd grad(const MultiPoly& p, const Eigen::VectorXd& x);
Eigen::MatrixXd hessian(const MultiPoly& p, const Eigen::VectorXd& x);

/// x_0^d p(x / x_0) in n+1 variables, x_0 first.
MultiPoly homogenize(const MultiPoly& p);
/// d/dx_0 of the homogenization, evaluated at x_0 = 1.
MultiPoly renegar_derivative(const MultiPoly& p);
/// p + eps * renegar_derivative(p).
MultiPoly smooth(const MultiPoly& p, double eps);
/// s -> p(s x).
UniPoly restrict(const MultiPoly& p, const Eigen::VectorXd& direction);

std::vector<std::complex<double>> roots(const UniPoly& q);
bool real_rooted(const UniPoly& q, double tol = 1e-8);

/// Determinant of a square matrix of polynomials (row-major, s*s entries),
/// expanded symbolically by memoized cofactor expansion.
MultiPoly determinant(std::span<const MultiPoly> entries, int s);
MultiPoly det_pencil(const MatrixPencil& pencil);

/// s_k(1 - sum x_i, 1 + x_1, ..., 1 + x_n), the dehomogenized elementary
/// symmetric polynomial. Requires 2 <= k <= n+1.
MultiPoly elementary_symmetric_pk(int n, int k);

}  // namespace homotopt

#endif  // HOMOTOPT_POLY_HPP
