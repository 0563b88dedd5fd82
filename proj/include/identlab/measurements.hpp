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

#ifndef IDENTLAB_MEASUREMENTS_HPP_
#define IDENTLAB_MEASUREMENTS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "identlab/common.hpp"

namespace identlab {

// Which family produced a functional and from which raw sample
// (xi then eta for rank-one, (row, col) for entries, the point for
// evaluations and feature maps).
struct Provenance {
  std::string family;
  std::vector<double> sample;
};

// A functional on V acting by dot product on flattened ambient vectors.
struct LinearFunctional {
  Vector coeffs;
  Provenance provenance;

  double operator()(const Vector& x) const { return coeffs.dot(x); }
};

struct MeasurementFamily {
  std::string name;
  int ambient_dim = 0;
  std::function<LinearFunctional(Rng&)> sampler;
  bool irreducible = true;    // claimed irreducibility of the closure
  bool nondegenerate = true;  // claimed to span the dual space

  LinearFunctional sample(Rng& rng) const { return sampler(rng); }
  std::vector<LinearFunctional> sample(Rng& rng, int count) const;
};

struct MeasurementSystem {
  std::vector<LinearFunctional> functionals;
  Vector values;

  int size() const { return static_cast<int>(functionals.size()); }
  // m x ambient matrix with the functionals as rows.
  Matrix coefficient_matrix() const;
  // Keeps the first `count` functionals and values.
  MeasurementSystem prefix(int count) const;
};

// Single-functional builders, also used by the samplers below.
LinearFunctional rank_one_functional(const Vector& xi, const Vector& eta);
LinearFunctional entry_functional(int d1, int d2, int row, int col);  // 0-based
LinearFunctional evaluation_functional(const Vector& point, int degree,
                                       bool lifted);

MeasurementFamily gaussian_family(int ambient_dim);
MeasurementFamily rank_one_family(int d1, int d2, bool normalize = true);
MeasurementFamily entry_family(int d1, int d2);
MeasurementFamily evaluation_family(int vars, int degree, bool lifted = true);

// Multiples alpha * direction of one fixed functional, alpha ~ N(0, 1). The
// image lies on a line through the origin of V*, so it is degenerate as soon
// as ambient_dim > 1.
MeasurementFamily line_family(const Vector& direction);

// Univariate basis on one axis of the tensor-product feature map.
struct AxisBasis {
  enum class Kind { kMonomial, kTabulated };
  Kind kind = Kind::kMonomial;
  int size = 1;  // kMonomial: phi_mu(t) = t^(mu-1), mu = 1..size
  // kTabulated: values[mu][q] is phi_mu at knots[q]; piecewise-linear
  // interpolation in between and constant extension outside the knots.
  std::vector<double> knots;
  std::vector<std::vector<double>> values;
  double lower = -1.0;  // sampling box for this axis
  double upper = 1.0;

  int count() const;
  double operator()(int mu, double t) const;  // 0-based mu
};

// Flattened (row-major, last axis fastest) rank-one tensor of basis values.
LinearFunctional tensor_feature_functional(const std::vector<AxisBasis>& axes,
                                           const Vector& point);
MeasurementFamily tensor_feature_family(std::vector<AxisBasis> axes);

MeasurementSystem measure_all(const Vector& x,
                              std::vector<LinearFunctional> functionals);

// Numerical rank of num_samples sampled coefficient rows.
int nondegeneracy_rank(const MeasurementFamily& family, int num_samples,
                       Rng& rng, double rel_tol = kDefaultRankTol);

}  // namespace identlab

#endif  // IDENTLAB_MEASUREMENTS_HPP_
