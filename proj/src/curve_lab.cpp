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

#include <algorithm>
#include <cmath>
#include <numbers>

namespace identlab {

namespace {

using Poly1 = std::vector<double>;  // ascending coefficients

Poly1 poly_mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_axpy(Poly1& acc, double s, const Poly1& p) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += s * p[i];
}

std::vector<Poly1> powers(const Poly1& base, int n) {
  std::vector<Poly1> out{{1.0}};
  for (int k = 1; k <= n; ++k) out.push_back(poly_mul(out.back(), base));
  return out;
}

}  // namespace

AffineLine make_line(double alpha1, double alpha2, double y) {
  const double n2 = alpha1 * alpha1 + alpha2 * alpha2;
  if (!(n2 > 0.0) || !std::isfinite(n2) || !std::isfinite(y)) {
    throw ConfigError("affine line: (alpha1, alpha2) must be finite and nonzero");
  }
  const double n = std::sqrt(n2);
  AffineLine line;
  line.alpha1 = alpha1;
  line.alpha2 = alpha2;
  line.y = y;
  line.base1 = alpha1 * y / n2;
  line.base2 = alpha2 * y / n2;
  line.dir1 = -alpha2 / n;
  line.dir2 = alpha1 / n;
  return line;
}

int LineIntersection::bezout_count() const {
  int total = infinity_count;
  for (const auto& p : points) total += p.multiplicity;
  return total;
}

std::vector<double> restrict_to_line(const BivariatePolynomial& f,
                                     const AffineLine& line) {
  const int bound = f.degree_bound();
  const auto p1 = powers({line.base1, line.dir1}, bound);
  const auto p2 = powers({line.base2, line.dir2}, bound);
  Poly1 out(static_cast<std::size_t>(bound) + 1, 0.0);
  for (int i = 0; i <= bound; ++i) {
    for (int j = 0; i + j <= bound; ++j) {
      const double c = f.coeff(i, j);
      if (c != 0.0) {
        poly_axpy(out, c,
                  poly_mul(p1[static_cast<std::size_t>(i)],
                           p2[static_cast<std::size_t>(j)]));
      }
    }
  }
  return out;
}

LineIntersection line_intersect(const ImplicitPlaneCurve& curve,
                                const AffineLine& line) {
  Poly1 restricted = restrict_to_line(curve.f, line);
  restricted.resize(static_cast<std::size_t>(curve.degree) + 1);

  double scale = 0.0;
  for (double c : restricted) scale = std::max(scale, std::abs(c));
  const double base = std::hypot(line.base1, line.base2);
  const double reference = curve.f.max_abs_coeff() *
                           std::pow(std::max(1.0, base), curve.degree);
  if (scale <= kLeadingTrimTol * reference) {
    throw LineInCurveError("line_intersect: the line is contained in the curve");
  }

  std::vector<Complex> coeffs(restricted.begin(), restricted.end());
  LineIntersection out;
  out.infinity_count = trim_leading(coeffs);
  if (coeffs.size() >= 2) {
    const auto roots = univariate_roots(coeffs);
    for (const auto& cl : cluster_roots(roots, kMultiplicityRadius)) {
      out.points.push_back({line.at(cl.value), cl.multiplicity});
    }
  }
  return out;
}

AffineLine tangent_line(const ImplicitPlaneCurve& curve, double p1, double p2) {
  const double value = curve.f(p1, p2);
  if (std::abs(value) > 1e-8) {
    throw NumericalError("tangent_line: point is not on the curve (|f| = " +
                         std::to_string(std::abs(value)) + ")");
  }
  const double g1 = curve.f.partial(1)(p1, p2);
  const double g2 = curve.f.partial(2)(p1, p2);
  if (std::hypot(g1, g2) <= 1e-10) {
    throw NumericalError("tangent_line: singular point, gradient vanishes");
  }
  return make_line(g1, g2, g1 * p1 + g2 * p2);
}

InflectionSystem hessian_inflection_system(const ImplicitPlaneCurve& curve) {
  if (curve.degree != 3) {
    throw ConfigError("hessian_inflection_system: curve must be a cubic");
  }
  InflectionSystem sys;
  sys.f = curve.f;
  BivariatePolynomial h = hessian_determinant(curve.homogenization).dehomogenize();
  const int d = h.total_degree();
  if (d < 0) throw NumericalError("hessian_inflection_system: Hessian vanishes");
  double lead = 0.0;
  for (int i = d; i >= 0 && lead == 0.0; --i) lead = h.coeff(i, d - i);
  sys.normalization = lead;
  sys.h = h * (1.0 / lead);
  return sys;
}

namespace {

// Newton on the complex 2x2 system {f = 0, h = 0}, kept while it helps.
ComplexPoint refine(const InflectionSystem& sys, ComplexPoint p) {
  const auto f1 = sys.f.partial(1), f2 = sys.f.partial(2);
  const auto h1 = sys.h.partial(1), h2 = sys.h.partial(2);
  auto size = [&](const ComplexPoint& q) {
    return std::abs(sys.f(q.x1, q.x2)) + std::abs(sys.h(q.x1, q.x2));
  };
  for (int it = 0; it < 4; ++it) {
    const Complex fv = sys.f(p.x1, p.x2), hv = sys.h(p.x1, p.x2);
    const Complex a = f1(p.x1, p.x2), b = f2(p.x1, p.x2);
    const Complex c = h1(p.x1, p.x2), d = h2(p.x1, p.x2);
    const Complex det = a * d - b * c;
    if (det == 0.0) break;
    const ComplexPoint cand{p.x1 - (d * fv - b * hv) / det,
                            p.x2 - (a * hv - c * fv) / det};
    if (!(size(cand) < size(p))) break;
    p = cand;
  }
  return p;
}

}  // namespace

std::vector<InflectionPoint> inflection_points(const ImplicitPlaneCurve& curve) {
  const InflectionSystem sys = hessian_inflection_system(curve);
  const BivariatePolynomial& f = sys.f;
  if (!f.is_even_in_x2() || !sys.h.is_even_in_x2()) {
    throw ConfigError("inflection_points: f and h must be even in x2");
  }
  const double a = f.coeff(0, 2);
  for (int i = 0; i <= f.degree_bound(); ++i) {
    for (int j = 2; i + j <= f.degree_bound(); ++j) {
      if ((i > 0 || j > 2) && f.coeff(i, j) != 0.0) {
        throw ConfigError("inflection_points: f must be a x2^2 + g(x1)");
      }
    }
  }
  if (a == 0.0) throw ConfigError("inflection_points: f has no x2^2 term");

  // x2^2 = square(x1) on the curve.
  Poly1 square(static_cast<std::size_t>(f.degree_bound()) + 1, 0.0);
  for (int i = 0; i <= f.degree_bound(); ++i) {
    square[static_cast<std::size_t>(i)] = -f.coeff(i, 0) / a;
  }

  const BivariatePolynomial& h = sys.h;
  Poly1 eliminated{0.0};
  Poly1 square_pow{1.0};
  for (int k = 0; 2 * k <= h.degree_bound(); ++k) {
    Poly1 hk(static_cast<std::size_t>(h.degree_bound()) + 1, 0.0);
    for (int i = 0; i + 2 * k <= h.degree_bound(); ++i) {
      hk[static_cast<std::size_t>(i)] = h.coeff(i, 2 * k);
    }
    poly_axpy(eliminated, 1.0, poly_mul(hk, square_pow));
    square_pow = poly_mul(square_pow, square);
  }

  std::vector<Complex> coeffs(eliminated.begin(), eliminated.end());
  const auto roots = univariate_roots(coeffs);
  std::vector<InflectionPoint> out;
  for (const Complex& x1 : roots) {
    const Complex s = horner(std::vector<Complex>(square.begin(), square.end()), x1);
    const Complex x2 = std::sqrt(s);
    for (const Complex& branch : {x2, -x2}) {
      InflectionPoint ip;
      ip.point = refine(sys, {x1, branch});
      const double tol = 1e-9 * (1.0 + std::abs(ip.point.x1));
      if (ip.point.is_real(tol)) {
        ip.real = true;
        ip.point.x1 = ip.point.x1.real();
        ip.point.x2 = ip.point.x2.real();
      }
      out.push_back(ip);
    }
  }
  return out;
}

ScanReport single_measurement_scan(const ImplicitPlaneCurve& curve, double p1,
                                   double p2, int num_directions, int workers) {
  if (num_directions < 1) throw ConfigError("scan: need at least one direction");
  if (std::abs(curve.f(p1, p2)) > 1e-8) {
    throw NumericalError("scan: point is not on the curve");
  }
  ScanReport report;
  report.angles.resize(static_cast<std::size_t>(num_directions));
  report.distinct_counts.resize(static_cast<std::size_t>(num_directions));
  parallel_for(num_directions, workers, [&](int k) {
    const double angle = std::numbers::pi * k / num_directions;
    const double a1 = std::cos(angle), a2 = std::sin(angle);
    const auto cut = line_intersect(curve, make_line(a1, a2, a1 * p1 + a2 * p2));
    report.angles[static_cast<std::size_t>(k)] = angle;
    report.distinct_counts[static_cast<std::size_t>(k)] = cut.distinct_count();
  });
  report.min_count = *std::min_element(report.distinct_counts.begin(),
                                       report.distinct_counts.end());
  report.max_count = *std::max_element(report.distinct_counts.begin(),
                                       report.distinct_counts.end());
  return report;
}

ConicTangentRecord conic_tangent_recovery(const ImplicitPlaneCurve& conic,
                                          double p1, double p2, Rng& rng) {
  if (conic.degree != 2) {
    throw ConfigError("conic_tangent_recovery: curve must have degree 2");
  }
  ConicTangentRecord rec;
  rec.tangent = tangent_line(conic, p1, p2);
  rec.tangent_cut = line_intersect(conic, rec.tangent);
  if (rec.tangent_cut.distinct_count() == 1) {
    const auto& ip = rec.tangent_cut.points.front();
    const double dist = std::abs(ip.point.x1 - p1) + std::abs(ip.point.x2 - p2);
    rec.tangent_is_single_double_point = ip.multiplicity == 2 && dist <= 1e-6;
  }

  const double scale = 0.25 * std::hypot(rec.tangent.alpha1, rec.tangent.alpha2);
  const Vector kick = standard_normal(rng, 2, scale);
  const double a1 = rec.tangent.alpha1 + kick(0);
  const double a2 = rec.tangent.alpha2 + kick(1);
  rec.perturbed = make_line(a1, a2, a1 * p1 + a2 * p2);
  rec.perturbed_cut = line_intersect(conic, rec.perturbed);
  rec.perturbed_has_two_points = rec.perturbed_cut.distinct_count() == 2;
  return rec;
}

std::vector<FigureRow> cubic_figure_data(double lambda, int samples) {
  const ImplicitPlaneCurve curve = make_cubic(lambda);
  if (samples < 2) throw ConfigError("figure: need at least two samples");
  const double lo = std::min(0.0, lambda) - 0.5;
  const double hi = std::max(1.0, lambda) + 1.5;
  std::vector<FigureRow> rows;
  for (int k = 0; k < samples; ++k) {
    const double x1 = lo + (hi - lo) * k / (samples - 1);
    const auto cut = line_intersect(curve, make_line(1.0, 0.0, x1));
    for (const auto& ip : cut.points) {
      if (!ip.point.is_real(1e-9)) continue;
      rows.push_back({"branch", x1, ip.point.x2.real()});
    }
  }
  rows.push_back({"q1", 0.0, 0.0});
  rows.push_back({"q2", 1.0, 0.0});
  rows.push_back({"q3", lambda, 0.0});
  for (const auto& ip : inflection_points(curve)) {
    if (!ip.real) continue;
    const double x2 = ip.point.x2.real();
    rows.push_back({x2 > 0.0 ? "p1" : "p2", ip.point.x1.real(), x2});
  }
  return rows;
}

}  // namespace identlab
