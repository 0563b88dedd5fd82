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

// Exact-degree computations for plane curves over C: line cuts, tangents,
// Hessians and inflection points. All arithmetic is complex double.

#ifndef IDENTLAB_CURVE_LAB_HPP_
#define IDENTLAB_CURVE_LAB_HPP_

#include <string>
#include <vector>

#include "identlab/common.hpp"
#include "identlab/plane_curve.hpp"
#include "identlab/roots.hpp"

namespace identlab {

inline constexpr double kMultiplicityRadius = 1e-6;

struct ComplexPoint {
  Complex x1;
  Complex x2;

  bool is_real(double tol = 1e-9) const {
    return std::abs(x1.imag()) <= tol && std::abs(x2.imag()) <= tol;
  }
};

// The affine line {v : alpha . v = y}, with base point alpha y / |alpha|^2
// and unit direction (-alpha2, alpha1) / |alpha|.
struct AffineLine {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double y = 0.0;
  double base1 = 0.0;
  double base2 = 0.0;
  double dir1 = 0.0;
  double dir2 = 0.0;

  ComplexPoint at(Complex s) const {
    return {base1 + s * dir1, base2 + s * dir2};
  }
};

// Throws ConfigError when (alpha1, alpha2) = (0, 0).
AffineLine make_line(double alpha1, double alpha2, double y);

struct IntersectionPoint {
  ComplexPoint point;
  int multiplicity = 1;
};

struct LineIntersection {
  std::vector<IntersectionPoint> points;  // distinct affine points
  int infinity_count = 0;                 // degree drop of the substitution

  int distinct_count() const { return static_cast<int>(points.size()); }
  // Affine points with multiplicity plus the points at infinity.
  int bezout_count() const;
};

// Thrown when the line is a component of the curve.
class LineInCurveError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Coefficients (ascending in s) of f(base + s dir), before trimming.
std::vector<double> restrict_to_line(const BivariatePolynomial& f,
                                     const AffineLine& line);

LineIntersection line_intersect(const ImplicitPlaneCurve& curve,
                                const AffineLine& line);

// ell = grad f(p), y = ell(p). Throws NumericalError when p is off the curve
// (|f(p)| > 1e-8) or singular.
AffineLine tangent_line(const ImplicitPlaneCurve& curve, double p1, double p2);

struct InflectionSystem {
  BivariatePolynomial f;
  // Hessian determinant of the homogenization at x0 = 1, divided by its
  // graded-lex leading coefficient.
  BivariatePolynomial h;
  double normalization = 1.0;  // the leading coefficient divided out
};

// Requires a cubic curve.
InflectionSystem hessian_inflection_system(const ImplicitPlaneCurve& curve);

struct InflectionPoint {
  ComplexPoint point;
  bool real = false;
};

// Affine solutions of {f = 0, h = 0}, obtained by substituting x2^2 from f
// into h (both must be even in x2 with f = a x2^2 + g(x1)) and solving the
// resulting univariate polynomial in x1.
std::vector<InflectionPoint> inflection_points(const ImplicitPlaneCurve& curve);

struct ScanReport {
  std::vector<double> angles;
  std::vector<int> distinct_counts;
  int min_count = 0;
  int max_count = 0;
};

// Lines through p with normals (cos a, sin a), a = k pi / n for k < n.
ScanReport single_measurement_scan(const ImplicitPlaneCurve& curve, double p1,
                                   double p2, int num_directions,
                                   int workers = 1);

struct ConicTangentRecord {
  AffineLine tangent;
  LineIntersection tangent_cut;
  bool tangent_is_single_double_point = false;
  AffineLine perturbed;
  LineIntersection perturbed_cut;
  bool perturbed_has_two_points = false;
};

// Requires a degree-2 curve and a smooth point p on it. The perturbed
// functional is the tangent normal plus a random N(0, (|ell| / 4)^2) kick,
// still passing through p.
ConicTangentRecord conic_tangent_recovery(const ImplicitPlaneCurve& conic,
                                          double p1, double p2, Rng& rng);

struct FigureRow {
  std::string label;  // "branch", "q1".."q3", "p1", "p2"
  double x1 = 0.0;
  double x2 = 0.0;
};

// Real branch samples of the cubic found by cutting with vertical lines at
// `samples` abscissae in [min(0, lambda) - 0.5, max(1, lambda) + 1.5], plus
// the three vertical-tangent points and the two real inflection points.
std::vector<FigureRow> cubic_figure_data(double lambda, int samples);

}  // namespace identlab

#endif  // IDENTLAB_CURVE_LAB_HPP_
