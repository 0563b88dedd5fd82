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

#ifndef IDENTLAB_FIBER_SOLVER_HPP_
#define IDENTLAB_FIBER_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "identlab/common.hpp"
#include "identlab/measurements.hpp"
#include "identlab/varieties.hpp"

namespace identlab {

struct SolverOptions {
  int num_starts = 200;
  int max_iters = 200;
  // Converged once ||r|| <= residual_tol * (1 + ||y||).
  double residual_tol = 1e-10;
  double cluster_tol = 1e-6;  // ambient-space distinctness radius
  double damping_init = 1e-3;
  double start_radius = 2.0;  // std. dev. of the innermost global starts
  // Std. dev. of perturbations around the target parameters.
  double local_radius = 0.1;
  int workers = 1;

  // Throws ConfigError on nonpositive values or cluster_tol <= residual_tol.
  void validate() const;
};

// r_i = <c_i, phi(theta)> - y_i.
Vector residual(const ParametricVariety& variety,
                const MeasurementSystem& system, const Vector& theta);

// Row i is c_i^T jac(theta).
Matrix residual_jacobian(const ParametricVariety& variety,
                         const MeasurementSystem& system, const Vector& theta);

struct LocalSolveResult {
  bool converged = false;
  Vector theta;
  double residual_norm = 0.0;
  int iterations = 0;
};

// Levenberg-Marquardt from theta0. Never throws for non-convergence; the
// result is flagged converged only when the residual test passes.
LocalSolveResult local_solve(const ParametricVariety& variety,
                             const MeasurementSystem& system,
                             const Vector& theta0, const SolverOptions& opts);

struct FiberTarget {
  Vector theta;
  Vector x;
};

struct FiberReport {
  std::vector<Vector> points;       // distinct ambient representatives
  std::vector<double> residuals;    // per point, ||r|| of the representative
  std::vector<int> basin_counts;    // converged starts per point
  int failed_starts = 0;
  std::optional<int> target_index;  // point within cluster_tol of the target

  int cardinality() const { return static_cast<int>(points.size()); }
  bool contains_target() const { return target_index.has_value(); }
  // Smallest pairwise ambient distance, +inf with fewer than two points.
  double min_pairwise_distance() const;
};

// Multi-start enumeration of X intersected with {l_i = y_i}. Global start i
// is N(0, s^2) with s = start_radius * 10^(i mod 3); with a target, one start in four is a
// perturbation of the target parameters instead. Start i draws from a
// stream derived from (seed, i), so the report does not depend on `workers`.
FiberReport enumerate_fiber(const ParametricVariety& variety,
                            const MeasurementSystem& system,
                            const SolverOptions& opts, std::uint64_t seed,
                            const std::optional<FiberTarget>& target = {});

// Greedy clustering by ascending residual. Exposed for testing.
FiberReport cluster_solutions(const std::vector<Vector>& points,
                              const std::vector<double>& residuals,
                              double cluster_tol);

// Keeps the points whose value under `extra` matches `value`, within tol.
FiberReport filter_fiber(const FiberReport& report,
                         const LinearFunctional& extra, double value,
                         double tol);

struct LocalIdentifiability {
  int rank = 0;
  bool identifiable = false;  // rank == intrinsic_dim
};

LocalIdentifiability local_identifiability(
    const ParametricVariety& variety,
    const std::vector<LinearFunctional>& functionals, const Vector& theta,
    double rel_tol = kDefaultRankTol);

struct WitnessStep {
  int rank = 0;
  bool degenerate = false;
};

// ranks[j] = rank of the first j + 1 rows of the residual Jacobian; a step is
// degenerate when the rank stalls while still below intrinsic_dim.
std::vector<WitnessStep> genericity_witness_check(
    const ParametricVariety& variety,
    const std::vector<LinearFunctional>& functionals, const Vector& theta,
    double rel_tol = kDefaultRankTol);

}  // namespace identlab

#endif  // IDENTLAB_FIBER_SOLVER_HPP_
