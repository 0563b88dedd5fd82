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

#include "identlab/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "identlab/monomials.hpp"

namespace identlab {

std::vector<LinearFunctional> MeasurementFamily::sample(Rng& rng,
                                                        int count) const {
  std::vector<LinearFunctional> out;
  out.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) out.push_back(sampler(rng));
  return out;
}

Matrix MeasurementSystem::coefficient_matrix() const {
  if (functionals.empty()) return Matrix(0, 0);
  Matrix c(size(), functionals.front().coeffs.size());
  for (int i = 0; i < size(); ++i) c.row(i) = functionals[i].coeffs.transpose();
  return c;
}

MeasurementSystem MeasurementSystem::prefix(int count) const {
  if (count < 0 || count > size()) {
    throw DimensionError("MeasurementSystem::prefix: count out of range");
  }
  MeasurementSystem out;
  out.functionals.assign(functionals.begin(), functionals.begin() + count);
  out.values = values.head(count);
  return out;
}

LinearFunctional rank_one_functional(const Vector& xi, const Vector& eta) {
  const Eigen::Index d1 = xi.size();
  const Eigen::Index d2 = eta.size();
  LinearFunctional f;
  f.coeffs.resize(d1 * d2);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d2; ++j) f.coeffs(i * d2 + j) = xi(i) * eta(j);
  }
  f.provenance.family = "rank_one";
  f.provenance.sample.assign(xi.data(), xi.data() + d1);
  f.provenance.sample.insert(f.provenance.sample.end(), eta.data(),
                             eta.data() + d2);
  return f;
}

LinearFunctional entry_functional(int d1, int d2, int row, int col) {
  if (row < 0 || row >= d1 || col < 0 || col >= d2) {
    throw DimensionError("entry_functional: index out of range");
  }
  LinearFunctional f;
  f.coeffs = Vector::Zero(d1 * d2);
  f.coeffs(row * d2 + col) = 1.0;
  f.provenance.family = "entry";
  f.provenance.sample = {static_cast<double>(row), static_cast<double>(col)};
  return f;
}

LinearFunctional evaluation_functional(const Vector& point, int degree,
                                       bool lifted) {
  const auto monomials =
      graded_lex_monomials(static_cast<int>(point.size()), degree, lifted);
  LinearFunctional f;
  f.coeffs.resize(static_cast<Eigen::Index>(monomials.size()));
  const std::span<const double> pt(point.data(),
                                   static_cast<std::size_t>(point.size()));
  for (std::size_t q = 0; q < monomials.size(); ++q) {
    f.coeffs(static_cast<Eigen::Index>(q)) = monomial_value(monomials[q], pt);
  }
  f.provenance.family = "evaluation";
  f.provenance.sample.assign(point.data(), point.data() + point.size());
  return f;
}

MeasurementFamily gaussian_family(int ambient_dim) {
  if (ambient_dim < 1) throw ConfigError("gaussian family: ambient_dim < 1");
  MeasurementFamily fam;
  fam.name = "gaussian";
  fam.ambient_dim = ambient_dim;
  fam.sampler = [ambient_dim](Rng& rng) {
    LinearFunctional f;
    // A Gaussian draw is zero with probability zero; redraw just in case.
    do {
      f.coeffs = standard_normal(rng, ambient_dim);
    } while (f.coeffs.norm() == 0.0);
    f.provenance.family = "gaussian";
    return f;
  };
  return fam;
}

MeasurementFamily rank_one_family(int d1, int d2, bool normalize) {
  if (d1 < 1 || d2 < 1) throw ConfigError("rank_one family: d1, d2 >= 1");
  MeasurementFamily fam;
  fam.name = "rank_one";
  fam.ambient_dim = d1 * d2;
  fam.sampler = [=](Rng& rng) {
    Vector xi, eta;
    do {
      xi = standard_normal(rng, d1);
      eta = standard_normal(rng, d2);
    } while (xi.norm() == 0.0 || eta.norm() == 0.0);
    if (normalize) {
      xi.normalize();
      eta.normalize();
    }
    return rank_one_functional(xi, eta);
  };
  return fam;
}

MeasurementFamily entry_family(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw ConfigError("entry family: d1, d2 >= 1");
  MeasurementFamily fam;
  fam.name = "entry";
  fam.ambient_dim = d1 * d2;
  fam.irreducible = false;
  fam.nondegenerate = true;
  fam.sampler = [=](Rng& rng) {
    std::uniform_int_distribution<int> rows(0, d1 - 1);
    std::uniform_int_distribution<int> cols(0, d2 - 1);
    const int r = rows(rng);
    const int c = cols(rng);
    return entry_functional(d1, d2, r, c);
  };
  return fam;
}

MeasurementFamily evaluation_family(int vars, int degree, bool lifted) {
  if (vars < 1 || degree < 1) {
    throw ConfigError("evaluation family: need d >= 1 and m >= 1");
  }
  MeasurementFamily fam;
  fam.name = "evaluation";
  fam.ambient_dim = static_cast<int>(
      lifted ? binomial(degree + vars, vars)
             : binomial(degree + vars - 1, vars - 1));
  fam.sampler = [=](Rng& rng) {
    return evaluation_functional(standard_normal(rng, vars), degree, lifted);
  };
  return fam;
}

MeasurementFamily line_family(const Vector& direction) {
  if (direction.size() < 1 || direction.norm() == 0.0) {
    throw ConfigError("line family: direction must be nonzero");
  }
  MeasurementFamily fam;
  fam.name = "line";
  fam.ambient_dim = static_cast<int>(direction.size());
  fam.irreducible = true;
  fam.nondegenerate = direction.size() == 1;
  fam.sampler = [direction](Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double alpha = 0.0;
    while (alpha == 0.0) alpha = normal(rng);
    LinearFunctional f;
    f.coeffs = alpha * direction;
    f.provenance.family = "line";
    f.provenance.sample = {alpha};
    return f;
  };
  return fam;
}

int AxisBasis::count() const {
  return kind == Kind::kMonomial ? size : static_cast<int>(values.size());
}

double AxisBasis::operator()(int mu, double t) const {
  if (kind == Kind::kMonomial) return std::pow(t, mu);
  const auto& row = values[static_cast<std::size_t>(mu)];
  if (t <= knots.front()) return row.front();
  if (t >= knots.back()) return row.back();
  const auto hi = std::upper_bound(knots.begin(), knots.end(), t);
  const std::size_t q = static_cast<std::size_t>(hi - knots.begin());
  const double w = (t - knots[q - 1]) / (knots[q] - knots[q - 1]);
  return (1.0 - w) * row[q - 1] + w * row[q];
}

namespace {

void validate_axis(const AxisBasis& axis) {
  if (axis.count() < 1) throw ConfigError("tensor feature: empty basis list");
  if (!(axis.lower < axis.upper)) {
    throw ConfigError("tensor feature: sampling box needs lower < upper");
  }
  if (axis.kind == AxisBasis::Kind::kTabulated) {
    if (axis.knots.size() < 2) {
      throw ConfigError("tensor feature: tabulated basis needs >= 2 knots");
    }
    if (!std::is_sorted(axis.knots.begin(), axis.knots.end()) ||
        std::adjacent_find(axis.knots.begin(), axis.knots.end()) !=
            axis.knots.end()) {
      throw ConfigError("tensor feature: knots must be strictly increasing");
    }
    for (const auto& row : axis.values) {
      if (row.size() != axis.knots.size()) {
        throw ConfigError("tensor feature: value table does not match knots");
      }
    }
  }
}

}  // namespace

LinearFunctional tensor_feature_functional(const std::vector<AxisBasis>& axes,
                                           const Vector& point) {
  if (axes.empty()) throw ConfigError("tensor feature: no axes");
  if (point.size() != static_cast<Eigen::Index>(axes.size())) {
    throw DimensionError("tensor feature: point has wrong number of axes");
  }
  Vector flat = Vector::Ones(1);
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const int m = axes[a].count();
    Vector next(flat.size() * m);
    for (Eigen::Index p = 0; p < flat.size(); ++p) {
      for (int mu = 0; mu < m; ++mu) {
        next(p * m + mu) = flat(p) * axes[a](mu, point(static_cast<Eigen::Index>(a)));
      }
    }
    flat = std::move(next);
  }
  LinearFunctional f;
  f.coeffs = std::move(flat);
  f.provenance.family = "tensor_feature";
  f.provenance.sample.assign(point.data(), point.data() + point.size());
  return f;
}

MeasurementFamily tensor_feature_family(std::vector<AxisBasis> axes) {
  if (axes.empty()) throw ConfigError("tensor feature: no axes");
  int dim = 1;
  for (const auto& axis : axes) {
    validate_axis(axis);
    dim *= axis.count();
  }
  MeasurementFamily fam;
  fam.name = "tensor_feature";
  fam.ambient_dim = dim;
  fam.sampler = [axes = std::move(axes)](Rng& rng) {
    Vector point(static_cast<Eigen::Index>(axes.size()));
    for (std::size_t a = 0; a < axes.size(); ++a) {
      std::uniform_real_distribution<double> u(axes[a].lower, axes[a].upper);
      point(static_cast<Eigen::Index>(a)) = u(rng);
    }
    return tensor_feature_functional(axes, point);
  };
  return fam;
}

MeasurementSystem measure_all(const Vector& x,
                              std::vector<LinearFunctional> functionals) {
  MeasurementSystem sys;
  sys.values.resize(static_cast<Eigen::Index>(functionals.size()));
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    if (functionals[i].coeffs.size() != x.size()) {
      throw DimensionError("measure_all: functional " + std::to_string(i) +
                           " has length " +
                           std::to_string(functionals[i].coeffs.size()) +
                           ", point has " + std::to_string(x.size()));
    }
    sys.values(static_cast<Eigen::Index>(i)) = functionals[i].coeffs.dot(x);
  }
  sys.functionals = std::move(functionals);
  return sys;
}

int nondegeneracy_rank(const MeasurementFamily& family, int num_samples,
                       Rng& rng, double rel_tol) {
  if (num_samples < 1) return 0;
  Matrix rows(num_samples, family.ambient_dim);
  for (int i = 0; i < num_samples; ++i) {
    rows.row(i) = family.sample(rng).coeffs.transpose();
  }
  return numerical_rank(rows, rel_tol);
}

}  // namespace identlab
