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

#ifndef IDENTLAB_VARIETIES_HPP_
#define IDENTLAB_VARIETIES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "identlab/common.hpp"
#include "identlab/monomials.hpp"

namespace identlab {

// A model X in V = R^ambient_dim given as the image of a polynomial map
// theta -> phi(theta). Immutable after construction and safe to share across
// threads.
struct ParametricVariety {
  std::string name;
  int ambient_dim = 0;
  int param_dim = 0;
  int intrinsic_dim = 0;
  int gauge_dim = 0;  // param_dim - intrinsic_dim
  std::function<Vector(const Vector&)> eval;
  std::function<Matrix(const Vector&)> jac;  // ambient_dim x param_dim
  // Degree of the closure when known for this model, used by experiments
  // that compare fiber sizes against it.
  std::optional<int> degree;
};

// Rank-at-most-k matrices as U W^T. Parameters are U (row-major, d1 x k)
// followed by W (row-major, d2 x k); ambient vectors are the row-major
// flattening of the d1 x d2 product.
ParametricVariety make_low_rank(int d1, int d2, int k);

// t -> (t, t^2).
ParametricVariety make_parabola();

struct VeroneseModelSpec {
  enum class Kind { kFull, kSparse, kWaring };
  Kind kind = Kind::kFull;
  int vars = 1;    // d
  int degree = 1;  // m
  // kSparse: indices into graded_lex_monomials(vars, degree, true).
  std::vector<int> support;
  // kWaring: number of summands r in sum_j c_j <a_j, (1, t)>^m.
  int rank = 1;
};

// Models inside the coefficient space of R[t_1..t_d]_{<=m}, monomials in
// graded lexicographic order. For the Waring model, intrinsic_dim is the
// generic Jacobian rank, measured once at construction from a fixed seed.
ParametricVariety make_veronese_model(const VeroneseModelSpec& spec);

Vector evaluate(const ParametricVariety& variety, const Vector& theta);
Matrix jacobian(const ParametricVariety& variety, const Vector& theta);

struct VarietySample {
  Vector theta;
  Vector x;
};

// theta ~ N(0, I); x = phi(theta).
VarietySample random_point(const ParametricVariety& variety, Rng& rng);

}  // namespace identlab

#endif  // IDENTLAB_VARIETIES_HPP_
