// Copyright 2026 The identlab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IDENTLAB_PLANE_CURVE_HPP_
#define IDENTLAB_PLANE_CURVE_HPP_

#include <complex>
#include <string>
#include <vector>

namespace identlab {

// Dense polynomial in (x1, x2): coefficient of x1^i x2^j for i + j <= bound.
class BivariatePolynomial {
 public:
  explicit BivariatePolynomial(int degree_bound = 0);

  int degree_bound() const { return bound_; }
  double coeff(int i, int j) const;
  void set(int i, int j, double value);
  void add(int i, int j, double value) { set(i, j, coeff(i, j) + value); }

  // Largest i + j with a nonzero coefficient; -1 for the zero polynomial.
  int total_degree() const;
  bool is_zero() const { return total_degree() < 0; }

  // The partial derivative with respect to x1 (var = 1) or x2 (var = 2).
  BivariatePolynomial partial(int var) const;

  // True when every coefficient of an odd power of x2 vanishes.
  bool is_even_in_x2() const;

  double max_abs_coeff() const;

  template <class T>
  T operator()(const T& x1, const T& x2) const {
    // Horner in x2 inside Horner in x1.
    T result(0);
    for (int i = bound_; i >= 0; --i) {
      T inner(0);
      for (int j = bound_ - i; j >= 0; --j) inner = inner * x2 + T(coeff(i, j));
      result = result * x1 + inner;
    }
    return result;
  }

  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(double s) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * (bound_ + 1) + j;
  }

  int bound_;
  std::vector<double> c_;
};

// Homogeneous ternary form of degree d: coefficient of x0^(d-i-j) x1^i x2^j.
class HomogeneousForm3 {
 public:
  explicit HomogeneousForm3(int degree = 0);

  int degree() const { return degree_; }
  double coeff(int i, int j) const { return table_.coeff(i, j); }
  void set(int i, int j, double v) { table_.set(i, j, v); }
  double coeff_exponents(int e0, int e1, int e2) const;
  bool is_zero() const { return table_.is_zero(); }

  // Partial derivative with respect to x_var, var in {0, 1, 2}.
  HomogeneousForm3 derivative(int var) const;

  HomogeneousForm3 operator+(const HomogeneousForm3& o) const;
  HomogeneousForm3 operator-(const HomogeneousForm3& o) const;
  HomogeneousForm3 operator*(const HomogeneousForm3& o) const;
  HomogeneousForm3 operator*(double s) const;

  // F(1, x1, x2).
  BivariatePolynomial dehomogenize() const;

  template <class T>
  T operator()(const T& x0, const T& x1, const T& x2) const {
    T result(0);
    for (int i = 0; i <= degree_; ++i) {
      for (int j = 0; i + j <= degree_; ++j) {
        const double c = coeff(i, j);
        if (c == 0.0) continue;
        result += T(c) * ipow(x0, degree_ - i - j) * ipow(x1, i) * ipow(x2, j);
      }
    }
    return result;
  }

 private:
  template <class T>
  static T ipow(const T& x, int e) {
    T r(1);
    for (int k = 0; k < e; ++k) r *= x;
    return r;
  }

  int degree_;
  BivariatePolynomial table_;  // (i, j) -> coefficient, x0 exponent implied
};

// Total-degree homogenization x0^d f(x1/x0, x2/x0) with d = total_degree(f).
HomogeneousForm3 homogenize(const BivariatePolynomial& f);

// 3x3 matrix of second partials of F, as forms of degree deg(F) - 2.
std::vector<std::vector<HomogeneousForm3>> hessian_matrix(
    const HomogeneousForm3& form);

HomogeneousForm3 hessian_determinant(const HomogeneousForm3& form);

struct ImplicitPlaneCurve {
  std::string name;
  BivariatePolynomial f;
  int degree = 0;
  HomogeneousForm3 homogenization;
};

// Validates f != 0 and fills in degree and homogenization.
ImplicitPlaneCurve make_implicit_curve(std::string name, BivariatePolynomial f);

// x2^2 - x1 (x1 - 1) (x1 - lambda); lambda must differ from 0 and 1.
ImplicitPlaneCurve make_cubic(double lambda);

// x1^2 + x2^2 - 1.
ImplicitPlaneCurve make_circle();

// x2 - x1^2, the implicit form of t -> (t, t^2).
ImplicitPlaneCurve make_parabola_curve();

// General conic c00 + c10 x1 + c01 x2 + c20 x1^2 + c11 x1 x2 + c02 x2^2.
ImplicitPlaneCurve make_conic(double c00, double c10, double c01, double c20,
                              double c11, double c02);

}  // namespace identlab

#endif  // IDENTLAB_PLANE_CURVE_HPP_
