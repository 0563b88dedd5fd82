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

#include "identlab/fiber_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace identlab {

void SolverOptions::validate() const {
  if (num_starts < 1 || max_iters < 1 || workers < 1) {
    throw ConfigError("solver: num_starts, max_iters, workers must be >= 1");
  }
  if (!(residual_tol > 0.0) || !(cluster_tol > 0.0) || !(damping_init > 0.0) ||
      !(start_radius > 0.0) || !(local_radius > 0.0)) {
    throw ConfigError("solver: tolerances, damping and radii must be positive");
  }
  if (!(cluster_tol > residual_tol)) {
    throw ConfigError("solver: cluster_tol must exceed residual_tol");
  }
}

namespace {

constexpr double kStartScaleLadder[3] = {1.0, 10.0, 100.0};

void check_dims(const ParametricVariety& variety,
                const MeasurementSystem& system, const Vector& theta) {
  if (theta.size() != variety.param_dim) {
    throw DimensionError("solver: theta has " + std::to_string(theta.size()) +
                         " entries, variety expects " +
                         std::to_string(variety.param_dim));
  }
  if (system.values.size() != system.size()) {
    throw DimensionError("solver: system has mismatched values");
  }
  for (const auto& f : system.functionals) {
    if (f.coeffs.size() != variety.ambient_dim) {
      throw DimensionError("solver: functional length " +
                           std::to_string(f.coeffs.size()) +
                           " differs from ambient dimension " +
                           std::to_string(variety.ambient_dim));
    }
  }
}

}  // namespace

Vector residual(const ParametricVariety& variety,
                const MeasurementSystem& system, const Vector& theta) {
  check_dims(variety, system, theta);
  return system.coefficient_matrix() * variety.eval(theta) - system.values;
}

Matrix residual_jacobian(const ParametricVariety& variety,
                         const MeasurementSystem& system, const Vector& theta) {
  check_dims(variety, system, theta);
  return system.coefficient_matrix() * variety.jac(theta);
}

LocalSolveResult local_solve(const ParametricVariety& variety,
                             const MeasurementSystem& system,
                             const Vector& theta0, const SolverOptions& opts) {
  check_dims(variety, system, theta0);
  const Matrix c = system.coefficient_matrix();
  const Vector& y = system.values;
  const double tol = opts.residual_tol * (1.0 + y.norm());
  constexpr int kPolishSteps = 3;

  LocalSolveResult out;
  Vector theta = theta0;
  Vector r = c * variety.eval(theta) - y;
  double cost = r.squaredNorm();
  double mu = -1.0;
  double nu = 2.0;
  int polish = 0;
  bool reached = std::sqrt(cost) <= tol;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    if (reached && polish >= kPolishSteps) break;
    const Matrix jm = c * variety.jac(theta);
    const Matrix jtj = jm.transpose() * jm;
    const Vector g = jm.transpose() * r;
    if (mu < 0.0) mu = opts.damping_init * std::max(jtj.diagonal().maxCoeff(), 1.0);

    Matrix lhs = jtj;
    lhs.diagonal().array() += mu;
    const Vector step = lhs.ldlt().solve(-g);
    out.iterations = iter + 1;
    if (!step.allFinite() ||
        step.norm() <= 1e-15 * (theta.norm() + 1e-15)) {
      break;  // step underflow
    }
    const Vector trial = theta + step;
    const Vector r_trial = c * variety.eval(trial) - y;
    const double cost_trial = r_trial.squaredNorm();
    // Gain ratio against the linearized model; Nielsen's damping update.
    const double predicted = step.dot(mu * step - g);
    const double rho = predicted > 0.0 ? (cost - cost_trial) / predicted : -1.0;
    if (std::isfinite(cost_trial) && cost_trial < cost && rho > 0.0) {
      theta = trial;
      r = r_trial;
      cost = cost_trial;
      mu *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * rho - 1.0, 3));
      nu = 2.0;
      if (reached) ++polish;
      reached = reached || std::sqrt(cost) <= tol;
    } else {
      if (reached) break;
      mu *= nu;
      nu *= 2.0;
      if (!(mu < 1e30)) break;
    }
  }
  out.theta = theta;
  out.residual_norm = std::sqrt(cost);
  out.converged = out.residual_norm <= tol && theta.allFinite();
  return out;
}

double FiberReport::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, (points[i] - points[j]).norm());
    }
  }
  return best;
}

FiberReport cluster_solutions(const std::vector<Vector>& points,
                              const std::vector<double>& residuals,
                              double cluster_tol) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return residuals[a] < residuals[b];
  });

  struct Cluster {
    std::size_t rep;
    int count;
  };
  std::vector<Cluster> clusters;
  for (std::size_t idx : order) {
    bool merged = false;
    for (auto& cl : clusters) {
      if ((points[cl.rep] - points[idx]).norm() <= cluster_tol) {
        ++cl.count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({idx, 1});
  }
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const Cluster& a, const Cluster& b) {
                     return a.count > b.count;
                   });

  FiberReport report;
  for (const auto& cl : clusters) {
    report.points.push_back(points[cl.rep]);
    report.residuals.push_back(residuals[cl.rep]);
    report.basin_counts.push_back(cl.count);
  }
  return report;
}

namespace {

void locate_target(FiberReport& report, const Vector& x, double cluster_tol) {
  report.target_index.reset();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const double d = (report.points[i] - x).norm();
    if (d <= cluster_tol && d < best) {
      best = d;
      report.target_index = static_cast<int>(i);
    }
  }
}

}  // namespace

FiberReport enumerate_fiber(const ParametricVariety& variety,
                            const MeasurementSystem& system,
                            const SolverOptions& opts, std::uint64_t seed,
                            const std::optional<FiberTarget>& target) {
  opts.validate();
  if (system.size() < 1) throw DimensionError("enumerate_fiber: empty system");
  check_dims(variety, system, Vector::Zero(variety.param_dim));
  if (target && target->theta.size() != variety.param_dim) {
    throw DimensionError("enumerate_fiber: target parameters have wrong size");
  }

  struct StartResult {
    bool converged = false;
    Vector x;
    double residual = 0.0;
  };
  std::vector<StartResult> results(static_cast<std::size_t>(opts.num_starts));
  parallel_for(opts.num_starts, opts.workers, [&](int i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i), "fiber-start"));
    Vector theta0;
    if (target && i % 4 == 3) {
      theta0 = target->theta + standard_normal(rng, variety.param_dim,
                                               opts.local_radius);
    } else {
      const double scale = opts.start_radius * kStartScaleLadder[i % 3];
      theta0 = standard_normal(rng, variety.param_dim, scale);
    }
    const LocalSolveResult sol = local_solve(variety, system, theta0, opts);
    auto& slot = results[static_cast<std::size_t>(i)];
    slot.converged = sol.converged;
    if (sol.converged) {
      slot.x = variety.eval(sol.theta);
      slot.residual = sol.residual_norm;
    }
  });

  std::vector<Vector> points;
  std::vector<double> residuals;
  int failed = 0;
  for (const auto& res : results) {
    if (res.converged) {
      points.push_back(res.x);
      residuals.push_back(res.residual);
    } else {
      ++failed;
    }
  }
  FiberReport report = cluster_solutions(points, residuals, opts.cluster_tol);
  report.failed_starts = failed;
  if (target) locate_target(report, target->x, opts.cluster_tol);
  return report;
}

FiberReport filter_fiber(const FiberReport& report,
                         const LinearFunctional& extra, double value,
                         double tol) {
  FiberReport out;
  out.failed_starts = report.failed_starts;
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    if (std::abs(extra(report.points[i]) - value) <= tol) {
      if (report.target_index && *report.target_index == static_cast<int>(i)) {
        out.target_index = out.cardinality();
      }
      out.points.push_back(report.points[i]);
      out.residuals.push_back(report.residuals[i]);
      out.basin_counts.push_back(report.basin_counts[i]);
    }
  }
  return out;
}

namespace {

Matrix stacked_jacobian(const ParametricVariety& variety,
                        const std::vector<LinearFunctional>& functionals,
                        const Vector& theta) {
  if (theta.size() != variety.param_dim) {
    throw DimensionError("identifiability: theta has wrong size");
  }
  const Matrix jm = variety.jac(theta);
  Matrix rows(static_cast<Eigen::Index>(functionals.size()), variety.param_dim);
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    if (functionals[i].coeffs.size() != variety.ambient_dim) {
      throw DimensionError("identifiability: functional has wrong length");
    }
    rows.row(static_cast<Eigen::Index>(i)) =
        functionals[i].coeffs.transpose() * jm;
  }
  return rows;
}

}  // namespace

LocalIdentifiability local_identifiability(
    const ParametricVariety& variety,
    const std::vector<LinearFunctional>& functionals, const Vector& theta,
    double rel_tol) {
  LocalIdentifiability out;
  out.rank = numerical_rank(stacked_jacobian(variety, functionals, theta), rel_tol);
  out.identifiable = out.rank == variety.intrinsic_dim;
  return out;
}

std::vector<WitnessStep> genericity_witness_check(
    const ParametricVariety& variety,
    const std::vector<LinearFunctional>& functionals, const Vector& theta,
    double rel_tol) {
  const Matrix rows = stacked_jacobian(variety, functionals, theta);
  std::vector<WitnessStep> steps;
  int previous = 0;
  for (Eigen::Index j = 1; j <= rows.rows(); ++j) {
    WitnessStep step;
    step.rank = numerical_rank(rows.topRows(j), rel_tol);
    step.degenerate = step.rank == previous && previous < variety.intrinsic_dim;
    steps.push_back(step);
    previous = step.rank;
  }
  return steps;
}

}  // namespace identlab
