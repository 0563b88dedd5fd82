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

#include "identlab/plane_curve.hpp"

#include <algorithm>
#include <cmath>

#include "identlab/common.hpp"

namespace identlab {

BivariatePolynomial::BivariatePolynomial(int degree_bound)
    : bound_(degree_bound) {
  if (degree_bound < 0) throw ConfigError("negative degree bound");
  c_.assign(static_cast<std::size_t>(bound_ + 1) * (bound_ + 1), 0.0);
}

double BivariatePolynomial::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > bound_) return 0.0;
  return c_[index(i, j)];
}

void BivariatePolynomial::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i + j > bound_) {
    throw DimensionError("BivariatePolynomial::set: exponent outside bound");
  }
  c_[index(i, j)] = value;
}

int BivariatePolynomial::total_degree() const {
  for (int d = bound_; d >= 0; --d) {
    for (int i = 0; i <= d; ++i) {
      if (coeff(i, d - i) != 0.0) return d;
    }
  }
  return -1;
}

BivariatePolynomial BivariatePolynomial::partial(int var) const {
  if (var != 1 && var != 2) throw ConfigError("partial: var must be 1 or 2");
  BivariatePolynomial out(std::max(bound_ - 1, 0));
  for (int i = 0; i <= bound_; ++i) {
    for (int j = 0; i + j <= bound_; ++j) {
      const double c = coeff(i, j);
      if (c == 0.0) continue;
      if (var == 1 && i > 0) out.add(i - 1, j, c * i);
      if (var == 2 && j > 0) out.add(i, j - 1, c * j);
    }
  }
  return out;
}

bool BivariatePolynomial::is_even_in_x2() const {
  for (int i = 0; i <= bound_; ++i) {
    for (int j = 1; i + j <= bound_; j += 2) {
      if (coeff(i, j) != 0.0) return false;
    }
  }
  return true;
}

double BivariatePolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : c_) m = std::max(m, std::abs(c));
  return m;
}

BivariatePolynomial BivariatePolynomial::operator+(
    const BivariatePolynomial& o) const {
  BivariatePolynomial out(std::max(bound_, o.bound_));
  for (int i = 0; i <= out.bound_; ++i) {
    for (int j = 0; i + j <= out.bound_; ++j) {
      out.set(i, j, coeff(i, j) + o.coeff(i, j));
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::operator-(
    const BivariatePolynomial& o) const {
  return *this + o * -1.0;
}

BivariatePolynomial BivariatePolynomial::operator*(
    const BivariatePolynomial& o) const {
  BivariatePolynomial out(bound_ + o.bound_);
  for (int i = 0; i <= bound_; ++i) {
    for (int j = 0; i + j <= bound_; ++j) {
      const double a = coeff(i, j);
      if (a == 0.0) continue;
      for (int k = 0; k <= o.bound_; ++k) {
        for (int l = 0; k + l <= o.bound_; ++l) {
          const double b = o.coeff(k, l);
          if (b != 0.0) out.add(i + k, j + l, a * b);
        }
      }
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::operator*(double s) const {
  BivariatePolynomial out = *this;
  for (double& c : out.c_) c *= s;
  return out;
}

HomogeneousForm3::HomogeneousForm3(int degree)
    : degree_(degree), table_(std::max(degree, 0)) {
  if (degree < 0) throw ConfigError("negative form degree");
}

double HomogeneousForm3::coeff_exponents(int e0, int e1, int e2) const {
  if (e0 + e1 + e2 != degree_) return 0.0;
  return coeff(e1, e2);
}

HomogeneousForm3 HomogeneousForm3::derivative(int var) const {
  if (var < 0 || var > 2) throw ConfigError("derivative: var must be 0, 1, 2");
  if (degree_ == 0) return HomogeneousForm3(0);
  HomogeneousForm3 out(degree_ - 1);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      const double c = coeff(i, j);
      if (c == 0.0) continue;
      const int e0 = degree_ - i - j;
      if (var == 0 && e0 > 0) out.set(i, j, out.coeff(i, j) + c * e0);
      if (var == 1 && i > 0) out.set(i - 1, j, out.coeff(i - 1, j) + c * i);
      if (var == 2 && j > 0) out.set(i, j - 1, out.coeff(i, j - 1) + c * j);
    }
  }
  return out;
}

HomogeneousForm3 HomogeneousForm3::operator+(const HomogeneousForm3& o) const {
  if (o.degree_ != degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    throw DimensionError("adding forms of different degree");
  }
  HomogeneousForm3 out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      out.set(i, j, coeff(i, j) + o.coeff(i, j));
    }
  }
  return out;
}

HomogeneousForm3 HomogeneousForm3::operator-(const HomogeneousForm3& o) const {
  return *this + o * -1.0;
}

HomogeneousForm3 HomogeneousForm3::operator*(const HomogeneousForm3& o) const {
  HomogeneousForm3 out(degree_ + o.degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      const double a = coeff(i, j);
      if (a == 0.0) continue;
      for (int k = 0; k <= o.degree_; ++k) {
        for (int l = 0; k + l <= o.degree_; ++l) {
          const double b = o.coeff(k, l);
          if (b != 0.0) out.set(i + k, j + l, out.coeff(i + k, j + l) + a * b);
        }
      }
    }
  }
  return out;
}

HomogeneousForm3 HomogeneousForm3::operator*(double s) const {
  HomogeneousForm3 out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) out.set(i, j, coeff(i, j) * s);
  }
  return out;
}

BivariatePolynomial HomogeneousForm3::dehomogenize() const {
  BivariatePolynomial out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) out.set(i, j, coeff(i, j));
  }
  return out;
}

HomogeneousForm3 homogenize(const BivariatePolynomial& f) {
  const int d = f.total_degree();
  if (d < 0) throw ConfigError("cannot homogenize the zero polynomial");
  HomogeneousForm3 out(d);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) out.set(i, j, f.coeff(i, j));
  }
  return out;
}

std::vector<std::vector<HomogeneousForm3>> hessian_matrix(
    const HomogeneousForm3& form) {
  std::vector<std::vector<HomogeneousForm3>> h(3);
  for (int a = 0; a < 3; ++a) {
    const HomogeneousForm3 da = form.derivative(a);
    for (int b = 0; b < 3; ++b) h[a].push_back(da.derivative(b));
  }
  return h;
}

HomogeneousForm3 hessian_determinant(const HomogeneousForm3& form) {
  const auto h = hessian_matrix(form);
  // Cofactor expansion along the first row.
  const HomogeneousForm3 c0 = h[1][1] * h[2][2] - h[1][2] * h[2][1];
  const HomogeneousForm3 c1 = h[1][0] * h[2][2] - h[1][2] * h[2][0];
  const HomogeneousForm3 c2 = h[1][0] * h[2][1] - h[1][1] * h[2][0];
  return h[0][0] * c0 - h[0][1] * c1 + h[0][2] * c2;
}

ImplicitPlaneCurve make_implicit_curve(std::string name,
                                       BivariatePolynomial f) {
  if (f.is_zero()) throw ConfigError("implicit curve: f is identically zero");
  ImplicitPlaneCurve curve;
  curve.name = std::move(name);
  curve.degree = f.total_degree();
  curve.homogenization = homogenize(f);
  curve.f = std::move(f);
  return curve;
}

ImplicitPlaneCurve make_cubic(double lambda) {
  if (!std::isfinite(lambda) || lambda == 0.0 || lambda == 1.0) {
    throw ConfigError("cubic: lambda must be finite and differ from 0 and 1");
  }
  // x2^2 - (x1^3 - (1 + lambda) x1^2 + lambda x1)
  BivariatePolynomial f(3);
  f.set(0, 2, 1.0);
  f.set(3, 0, -1.0);
  f.set(2, 0, 1.0 + lambda);
  f.set(1, 0, -lambda);
  return make_implicit_curve("cubic", std::move(f));
}

ImplicitPlaneCurve make_circle() {
  BivariatePolynomial f(2);
  f.set(2, 0, 1.0);
  f.set(0, 2, 1.0);
  f.set(0, 0, -1.0);
  return make_implicit_curve("circle", std::move(f));
}

ImplicitPlaneCurve make_parabola_curve() {
  BivariatePolynomial f(2);
  f.set(0, 1, 1.0);
  f.set(2, 0, -1.0);
  return make_implicit_curve("parabola", std::move(f));
}

ImplicitPlaneCurve make_conic(double c00, double c10, double c01, double c20,
                              double c11, double c02) {
  BivariatePolynomial f(2);
  f.set(0, 0, c00);
  f.set(1, 0, c10);
  f.set(0, 1, c01);
  f.set(2, 0, c20);
  f.set(1, 1, c11);
  f.set(0, 2, c02);
  return make_implicit_curve("conic", std::move(f));
}

}  // namespace identlab
