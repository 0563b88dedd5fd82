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

#ifndef IDENTLAB_COMMON_HPP_
#define IDENTLAB_COMMON_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace identlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

// Thrown when vector or matrix sizes disagree with a model's dimensions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown for invalid construction parameters or malformed config documents.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a computation cannot proceed for numerical reasons
// (singular pivot block, point off the curve, singular point, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Singular values below rel_tol * sigma_max are treated as zero.
inline constexpr double kDefaultRankTol = 1e-8;

int numerical_rank(const Matrix& m, double rel_tol = kDefaultRankTol);

// Deterministic 64-bit stream derivation (splitmix64 finalizer chained over
// the inputs). Used to give every trial / start / purpose its own generator.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                          std::string_view purpose);

Vector standard_normal(Rng& rng, Eigen::Index n, double scale = 1.0);

// Runs body(i) for i in [0, n) across `workers` threads. Each index is
// processed exactly once; callers write results into per-index slots.
void parallel_for(int n, int workers, const std::function<void(int)>& body);

}  // namespace identlab

#endif  // IDENTLAB_COMMON_HPP_
