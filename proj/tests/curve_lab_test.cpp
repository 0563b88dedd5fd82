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


#include "identlab/curve_lab.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace identlab {
namespace {

bool has_point(const LineIntersection& cut, double x1, double x2, int mult,
               double tol = 1e-8) {
  for (const auto& ip : cut.points) {
    if (std::abs(ip.point.x1 - Complex(x1)) <= tol &&
        std::abs(ip.point.x2 - Complex(x2)) <= tol) {
      return ip.multiplicity == mult;
    }
  }
  return false;
}

// |f(p)| relative to the size of the terms summed at p.
double relative_residual(const ImplicitPlaneCurve& curve, const ComplexPoint& p) {
  double scale = 0.0;
  const double r = std::max({1.0, std::abs(p.x1), std::abs(p.x2)});
  for (int i = 0; i <= curve.degree; ++i)
    for (int j = 0; i + j <= curve.degree; ++j)
      scale += std::abs(curve.f.coeff(i, j)) * std::pow(r, i + j);
  return std::abs(curve.f(p.x1, p.x2)) / scale;
}

std::vector<ImplicitPlaneCurve> builtin_curves() {
  return {make_parabola_curve(), make_circle(), make_cubic(2.0), make_cubic(-1.5),
          make_conic(0.5, 1.0, -2.0, 1.0, 0.3, -0.7)};
}

TEST(RootsOnCutPolynomials, ListedCases) {
  const std::vector<double> a = {-1, 0, 1};
  const auto ra = univariate_roots(std::span<const double>(a));
  ASSERT_EQ(ra.size(), 2u);
  EXPECT_NEAR(std::abs(ra[0] - Complex(-1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(ra[1] - Complex(1)), 0.0, 1e-14);
  const std::vector<double> b = {1, 0, 1};
  const auto rb = univariate_roots(std::span<const double>(b));
  ASSERT_EQ(rb.size(), 2u);
  EXPECT_NEAR(std::abs(rb[0] - Complex(0, -1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(rb[1] - Complex(0, 1)), 0.0, 1e-14);
  const std::vector<double> c = {0, 2, -3, 1};
  const auto rc = univariate_roots(std::span<const double>(c));
  ASSERT_EQ(rc.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(rc[k] - Complex(k)), 0.0, 1e-12);
}

TEST(MakeLine, BaseAndDirection) {
  const auto line = make_line(3.0, 4.0, 10.0);
  EXPECT_NEAR(3.0 * line.base1 + 4.0 * line.base2, 10.0, 1e-14);
  EXPECT_NEAR(3.0 * line.dir1 + 4.0 * line.dir2, 0.0, 1e-14);
  EXPECT_NEAR(std::hypot(line.dir1, line.dir2), 1.0, 1e-14);
  EXPECT_THROW(make_line(0.0, 0.0, 1.0), ConfigError);
}

TEST(LineIntersect, ParabolaVerticalLineLosesPointToInfinity) {
  const auto cut = line_intersect(make_parabola_curve(), make_line(1, 0, 1));
  EXPECT_EQ(cut.distinct_count(), 1);
  EXPECT_EQ(cut.infinity_count, 1);
  EXPECT_TRUE(has_point(cut, 1.0, 1.0, 1));
  EXPECT_EQ(cut.bezout_count(), 2);
}

TEST(LineIntersect, CubicVerticalLineThroughOrigin) {
  const auto cut = line_intersect(make_cubic(2.0), make_line(1, 0, 0));
  EXPECT_EQ(cut.distinct_count(), 1);
  EXPECT_EQ(cut.infinity_count, 1);
  EXPECT_TRUE(has_point(cut, 0.0, 0.0, 2));
}

TEST(LineIntersect, CubicHorizontalAxis) {
  const auto cut = line_intersect(make_cubic(2.0), make_line(0, 1, 0));
  EXPECT_EQ(cut.distinct_count(), 3);
  EXPECT_EQ(cut.infinity_count, 0);
  EXPECT_TRUE(has_point(cut, 0.0, 0.0, 1));
  EXPECT_TRUE(has_point(cut, 1.0, 0.0, 1));
  EXPECT_TRUE(has_point(cut, 2.0, 0.0, 1));
}

TEST(LineIntersect, LineInsideCurveRaises) {
  // x1 (x1 + x2 - 1) contains the line x1 = 0.
  BivariatePolynomial f(2);
  f.set(2, 0, 1.0);
  f.set(1, 1, 1.0);
  f.set(1, 0, -1.0);
  const auto curve = make_implicit_curve("pair", f);
  EXPECT_THROW(line_intersect(curve, make_line(1, 0, 0)), LineInCurveError);
}

TEST(LineIntersect, BezoutCountForRandomLines) {
  Rng rng(808);
  std::normal_distribution<double> normal;
  for (const auto& curve : builtin_curves()) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto line = make_line(normal(rng), normal(rng), normal(rng));
      const auto cut = line_intersect(curve, line);
      EXPECT_EQ(cut.bezout_count(), curve.degree) << curve.name;
      for (const auto& ip : cut.points) {
        EXPECT_LE(relative_residual(curve, ip.point), 1e-12) << curve.name;
      }
    }
  }
}

TEST(LineIntersect, InvariantUnderRescaling) {
  Rng rng(809);
  std::normal_distribution<double> normal;
  const auto curve = make_cubic(2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a1 = normal(rng), a2 = normal(rng), y = normal(rng);
    const double c = trial % 2 == 0 ? -3.7 : 0.02;
    const auto u = line_intersect(curve, make_line(a1, a2, y));
    const auto v = line_intersect(curve, make_line(c * a1, c * a2, c * y));
    ASSERT_EQ(u.distinct_count(), v.distinct_count());
    for (const auto& p : u.points) {
      double best = 1e300;
      for (const auto& q : v.points) {
        best = std::min(best, std::abs(p.point.x1 - q.point.x1) +
                                  std::abs(p.point.x2 - q.point.x2));
      }
      EXPECT_LE(best, 1e-8);
    }
  }
}

TEST(TangentLine, ListedCases) {
  const auto t = tangent_line(make_circle(), 1.0, 0.0);
  EXPECT_DOUBLE_EQ(t.alpha1, 2.0);
  EXPECT_DOUBLE_EQ(t.alpha2, 0.0);
  EXPECT_DOUBLE_EQ(t.y, 2.0);
  const auto p = tangent_line(make_parabola_curve(), 0.0, 0.0);
  EXPECT_DOUBLE_EQ(p.alpha1, 0.0);
  EXPECT_NE(p.alpha2, 0.0);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  const auto c = tangent_line(make_cubic(2.0), 0.0, 0.0);
  EXPECT_NE(c.alpha1, 0.0);
  EXPECT_DOUBLE_EQ(c.alpha2, 0.0);
  EXPECT_DOUBLE_EQ(c.y, 0.0);
}

TEST(TangentLine, RejectsOffCurveAndSingularPoints) {
  EXPECT_THROW(tangent_line(make_circle(), 0.5, 0.5), NumericalError);
  // Node of x2^2 - x1^2 (x1 + 1) at the origin.
  BivariatePolynomial f(3);
  f.set(0, 2, 1.0);
  f.set(3, 0, -1.0);
  f.set(2, 0, -1.0);
  EXPECT_THROW(tangent_line(make_implicit_curve("nodal", f), 0.0, 0.0),
               NumericalError);
}

TEST(TangentLine, CubicTangentsAtAxisPointsAreParallel) {
  const auto curve = make_cubic(2.0);
  for (double x : {0.0, 1.0, 2.0}) {
    const auto t = tangent_line(curve, x, 0.0);
    EXPECT_NEAR(std::abs(t.dir1), 0.0, 1e-14) << x;
    EXPECT_NEAR(std::abs(t.dir2), 1.0, 1e-14) << x;
  }
}

TEST(Inflection, SystemNormalizationAndOriginValue) {
  for (double lambda : {2.0, -1.5, 3.0, 0.25}) {
    const auto sys = hessian_inflection_system(make_cubic(lambda));
    EXPECT_NEAR(sys.h(0.0, 0.0), -lambda * lambda / 3.0, 1e-12) << lambda;
    EXPECT_TRUE(sys.h.is_even_in_x2());
    EXPECT_NE(sys.normalization, 0.0);
  }
  const auto sys = hessian_inflection_system(make_cubic(2.0));
  // Raw Hessian at x0 = 1 has value -32 at the origin.
  EXPECT_NEAR(sys.h(0.0, 0.0) * sys.normalization, -32.0, 1e-10);
  EXPECT_THROW(hessian_inflection_system(make_circle()), ConfigError);
}

TEST(Inflection, HessianMatchesFiniteDifferences) {
  const auto F = make_cubic(2.0).homogenization;
  const auto hm = hessian_matrix(F);
  Rng rng(5);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 10; ++trial) {
    const double x[3] = {normal(rng), normal(rng), normal(rng)};
    const double h = 1e-4;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        auto at = [&](double da, double db) {
          double p[3] = {x[0], x[1], x[2]};
          p[a] += da;
          p[b] += db;
          return F(p[0], p[1], p[2]);
        };
        const double fd = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
        EXPECT_NEAR(hm[a][b](x[0], x[1], x[2]), fd, 1e-5 * (1.0 + std::abs(fd)));
      }
    }
  }
}

TEST(Inflection, EightPointsTwoRealForLambdaTwo) {
  const auto curve = make_cubic(2.0);
  const auto sys = hessian_inflection_system(curve);
  const auto pts = inflection_points(curve);
  ASSERT_EQ(pts.size(), 8u);
  int real = 0;
  std::vector<ComplexPoint> real_pts;
  for (const auto& p : pts) {
    EXPECT_LE(std::abs(curve.f(p.point.x1, p.point.x2)), 1e-8);
    EXPECT_LE(std::abs(sys.h(p.point.x1, p.point.x2)), 1e-6);
    if (p.real) {
      ++real;
      real_pts.push_back(p.point);
    }
  }
  ASSERT_EQ(real, 2);
  EXPECT_NEAR(real_pts[0].x1.real(), real_pts[1].x1.real(), 1e-10);
  EXPECT_NEAR(real_pts[0].x2.real(), -real_pts[1].x2.real(), 1e-10);
  EXPECT_NEAR(real_pts[0].x1.real(), oracle::kRealInflectionX1, 1e-10);
  EXPECT_NEAR(std::abs(real_pts[0].x2.real()), oracle::kRealInflectionX2, 1e-10);
}

TEST(Inflection, MatchesFrozenSymbolicSolutions) {
  const auto pts = inflection_points(make_cubic(2.0));
  int near_negative = 0, complex_pairs = 0;
  for (const auto& p : pts) {
    if (std::abs(p.point.x1 - Complex(oracle::kNegativeInflectionX1)) < 1e-9) {
      ++near_negative;
      EXPECT_NEAR(std::abs(p.point.x2.real()), 0.0, 1e-9);
      EXPECT_NEAR(std::abs(p.point.x2.imag()), oracle::kRealInflectionX2, 1e-9);
    }
    if (std::abs(std::abs(p.point.x1.imag()) - oracle::kComplexInflectionX1Imag) < 1e-9) {
      EXPECT_NEAR(p.point.x1.real(), 1.0, 1e-9);
      ++complex_pairs;
    }
  }
  EXPECT_EQ(near_negative, 2);
  EXPECT_EQ(complex_pairs, 4);
}

TEST(Inflection, OtherLambdasGiveEightSolutions) {
  for (double lambda : {-1.0, 0.5, 3.0, 5.5}) {
    const auto curve = make_cubic(lambda);
    const auto sys = hessian_inflection_system(curve);
    const auto pts = inflection_points(curve);
    ASSERT_EQ(pts.size(), 8u) << lambda;
    int real = 0;
    for (const auto& p : pts) {
      EXPECT_LE(std::abs(curve.f(p.point.x1, p.point.x2)), 1e-8);
      EXPECT_LE(std::abs(sys.h(p.point.x1, p.point.x2)), 1e-6);
      real += p.real ? 1 : 0;
    }
    EXPECT_EQ(real, 2) << lambda;
  }
}

TEST(Scan, CubicNeverIdentifiesFromOneMeasurement) {
  const auto curve = make_cubic(2.0);
  for (double x1 : {0.4, 0.7, 2.6, 3.5}) {
    const double x2 = std::sqrt(x1 * (x1 - 1) * (x1 - 2));
    const auto scan = single_measurement_scan(curve, x1, x2, 360);
    EXPECT_EQ(scan.angles.size(), 360u);
    EXPECT_GE(scan.min_count, 2) << x1;
    EXPECT_LE(scan.max_count, 3);
  }
}

TEST(Scan, ParabolaVerticalDirectionIdentifies) {
  const auto scan = single_measurement_scan(make_parabola_curve(), 1.0, 1.0, 180);
  EXPECT_DOUBLE_EQ(scan.angles[0], 0.0);
  EXPECT_EQ(scan.distinct_counts[0], 1);
  int ones = 0;
  for (int c : scan.distinct_counts) ones += c == 1 ? 1 : 0;
  // Angle 0 and the tangent direction, if it lies on the grid.
  EXPECT_LE(ones, 2);
  EXPECT_EQ(scan.max_count, 2);
}

TEST(Scan, CircleTangentDirection) {
  const auto scan = single_measurement_scan(make_circle(), 1.0, 0.0, 90);
  EXPECT_EQ(scan.distinct_counts[0], 1);
  EXPECT_EQ(scan.distinct_counts[45], 2);
}

TEST(Scan, ParallelMatchesSerial) {
  const auto curve = make_cubic(2.0);
  const double x2 = std::sqrt(2.6 * 1.6 * 0.6);
  const auto a = single_measurement_scan(curve, 2.6, x2, 120, 1);
  const auto b = single_measurement_scan(curve, 2.6, x2, 120, 3);
  EXPECT_EQ(a.distinct_counts, b.distinct_counts);
  EXPECT_EQ(a.angles, b.angles);
}

TEST(ConicTangent, CircleAndParabola) {
  Rng rng(3);
  const auto c = conic_tangent_recovery(make_circle(), 1.0, 0.0, rng);
  EXPECT_TRUE(c.tangent_is_single_double_point);
  ASSERT_EQ(c.tangent_cut.distinct_count(), 1);
  EXPECT_EQ(c.tangent_cut.points[0].multiplicity, 2);
  EXPECT_NEAR(std::abs(c.tangent_cut.points[0].point.x1 - Complex(1.0)), 0.0, 1e-6);

  const auto up = conic_tangent_recovery(make_circle(), 0.0, 1.0, rng);
  EXPECT_TRUE(up.perturbed_has_two_points);
  EXPECT_EQ(up.perturbed_cut.distinct_count(), 2);
  // Quadratic-formula check of the perturbed cut along its parametrization.
  const auto line = up.perturbed;
  const auto coeffs = restrict_to_line(make_circle().f, line);
  const auto roots = oracle::quadratic_real_roots(coeffs[2], coeffs[1], coeffs[0]);
  ASSERT_EQ(roots.size(), 2u);
  for (double s : roots) {
    const auto p = line.at(Complex(s));
    bool found = false;
    for (const auto& ip : up.perturbed_cut.points) {
      found = found || (std::abs(ip.point.x1 - p.x1) + std::abs(ip.point.x2 - p.x2) < 1e-8);
    }
    EXPECT_TRUE(found);
  }

  const auto par = conic_tangent_recovery(make_parabola_curve(), 1.0, 1.0, rng);
  EXPECT_TRUE(par.tangent_is_single_double_point);
  EXPECT_TRUE(par.perturbed_has_two_points);
  EXPECT_THROW(conic_tangent_recovery(make_cubic(2.0), 0.0, 0.0, rng), ConfigError);
}

TEST(Figure, LabeledPointsAndBranches) {
  const auto rows = cubic_figure_data(2.0, 200);
  std::map<std::string, FigureRow> labeled;
  int branch = 0;
  const auto curve = make_cubic(2.0);
  for (const auto& r : rows) {
    if (r.label == "branch") {
      ++branch;
      EXPECT_LE(std::abs(curve.f(r.x1, r.x2)), 1e-9);
    } else {
      labeled[r.label] = r;
    }
  }
  EXPECT_GT(branch, 100);
  ASSERT_EQ(labeled.size(), 5u);
  EXPECT_DOUBLE_EQ(labeled["q1"].x1, 0.0);
  EXPECT_DOUBLE_EQ(labeled["q2"].x1, 1.0);
  EXPECT_DOUBLE_EQ(labeled["q3"].x1, 2.0);
  for (const char* q : {"q1", "q2", "q3"}) EXPECT_DOUBLE_EQ(labeled[q].x2, 0.0);
  EXPECT_NEAR(labeled["p1"].x1, oracle::kRealInflectionX1, 1e-10);
  EXPECT_NEAR(labeled["p1"].x2, oracle::kRealInflectionX2, 1e-10);
  EXPECT_NEAR(labeled["p2"].x2, -oracle::kRealInflectionX2, 1e-10);
}

}  // namespace
}  // namespace identlab
