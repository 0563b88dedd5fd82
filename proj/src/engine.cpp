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

#include "identlab/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <set>

namespace identlab {

ParametricVariety build_variety(const VarietySpec& spec) {
  if (spec.kind == "parabola") return make_parabola();
  if (spec.kind == "low_rank") return make_low_rank(spec.d1, spec.d2, spec.k);
  if (spec.kind == "veronese") return make_veronese_model(spec.veronese);
  throw ConfigError("unknown variety kind '" + spec.kind + "'");
}

MeasurementFamily build_family(const FamilySpec& spec, int ambient_hint) {
  if (spec.kind == "gaussian") {
    return gaussian_family(spec.ambient_dim > 0 ? spec.ambient_dim : ambient_hint);
  }
  if (spec.kind == "rank_one") {
    return rank_one_family(spec.d1, spec.d2, spec.normalize);
  }
  if (spec.kind == "entry") return entry_family(spec.d1, spec.d2);
  if (spec.kind == "evaluation") {
    return evaluation_family(spec.vars, spec.degree, spec.lifted);
  }
  if (spec.kind == "tensor_feature") return tensor_feature_family(spec.axes);
  if (spec.kind == "line") {
    return line_family(Eigen::Map<const Vector>(
        spec.direction.data(), static_cast<Eigen::Index>(spec.direction.size())));
  }
  throw ConfigError("unknown family kind '" + spec.kind + "'");
}

ImplicitPlaneCurve build_curve(const CurveSpec& spec) {
  if (spec.kind == "cubic") return make_cubic(spec.lambda);
  if (spec.kind == "circle") return make_circle();
  if (spec.kind == "parabola") return make_parabola_curve();
  if (spec.kind == "conic") {
    if (spec.conic.size() != 6) {
      throw ConfigError("conic curve needs 6 coefficients c00 c10 c01 c20 c11 c02");
    }
    const auto& c = spec.conic;
    return make_conic(c[0], c[1], c[2], c[3], c[4], c[5]);
  }
  throw ConfigError("unknown curve kind '" + spec.kind + "'");
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  if (workers < 1) throw ConfigError("config: workers must be >= 1");
  if (measurement_counts.empty()) {
    throw ConfigError("config: measurement_counts must not be empty");
  }
  for (int m : measurement_counts) {
    if (m < 1) throw ConfigError("config: measurement counts must be positive");
  }
  solver.validate();
}

double CountSummary::cardinality_rate(int cardinality) const {
  const auto it = cardinality_histogram.find(cardinality);
  if (it == cardinality_histogram.end() || trials == 0) return 0.0;
  return static_cast<double>(it->second) / trials;
}

const CountSummary& ExperimentReport::summary_for(int measurements) const {
  for (const auto& s : summaries) {
    if (s.measurements == measurements) return s;
  }
  throw ConfigError("no summary for " + std::to_string(measurements) +
                    " measurements");
}

TrialSetup draw_trial(const ExperimentConfig& config,
                      const ParametricVariety& variety,
                      const MeasurementFamily& family, int trial) {
  const auto index = static_cast<std::uint64_t>(trial);
  TrialSetup setup;
  setup.seed = derive_seed(config.master_seed, index, "trial");
  Rng point_rng(derive_seed(config.master_seed, index, "point"));
  setup.sample = random_point(variety, point_rng);
  Rng measure_rng(derive_seed(config.master_seed, index, "measure"));
  const int count = *std::max_element(config.measurement_counts.begin(),
                                      config.measurement_counts.end());
  setup.system = measure_all(setup.sample.x, family.sample(measure_rng, count));
  setup.start_seed = derive_seed(config.master_seed, index, "starts");
  return setup;
}

namespace {

void check_compatible(const ParametricVariety& variety,
                      const MeasurementFamily& family) {
  if (family.ambient_dim != variety.ambient_dim) {
    throw DimensionError("family '" + family.name + "' acts on dimension " +
                         std::to_string(family.ambient_dim) + " but variety '" +
                         variety.name + "' lives in dimension " +
                         std::to_string(variety.ambient_dim));
  }
}

}  // namespace

ExperimentReport run_trials(const ExperimentConfig& config) {
  config.validate();
  const ParametricVariety variety = build_variety(config.variety);
  const MeasurementFamily family = build_family(config.family, variety.ambient_dim);
  check_compatible(variety, family);

  std::vector<int> counts = config.measurement_counts;
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

  std::vector<std::vector<TrialRecord>> per_trial(
      static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.workers, [&](int trial) {
    const TrialSetup setup = draw_trial(config, variety, family, trial);
    const FiberTarget target{setup.sample.theta, setup.sample.x};
    auto& out = per_trial[static_cast<std::size_t>(trial)];
    for (int m : counts) {
      const auto start = std::chrono::steady_clock::now();
      const FiberReport fiber = enumerate_fiber(
          variety, setup.system.prefix(m), config.solver, setup.start_seed, target);
      const auto stop = std::chrono::steady_clock::now();
      TrialRecord rec;
      rec.trial = trial;
      rec.seed = setup.seed;
      rec.measurements = m;
      rec.cardinality = fiber.cardinality();
      rec.target_recovered = fiber.contains_target();
      rec.unique_recovery = rec.cardinality == 1 && rec.target_recovered;
      rec.min_pairwise_distance = fiber.min_pairwise_distance();
      rec.failed_starts = fiber.failed_starts;
      if (config.record_timing) {
        rec.wall_seconds = std::chrono::duration<double>(stop - start).count();
      }
      out.push_back(rec);
    }
  });

  ExperimentReport report;
  report.config = config;
  for (int m : counts) {
    CountSummary s;
    s.measurements = m;
    report.summaries.push_back(s);
  }
  for (const auto& recs : per_trial) {
    for (const auto& rec : recs) {
      report.records.push_back(rec);
      auto& s = *std::find_if(report.summaries.begin(), report.summaries.end(),
                              [&](const CountSummary& c) {
                                return c.measurements == rec.measurements;
                              });
      ++s.trials;
      ++s.cardinality_histogram[rec.cardinality];
      if (rec.unique_recovery) ++s.unique_recoveries;
      if (!rec.target_recovered) {
        ++s.solver_failures;
      } else if (rec.cardinality > 1) {
        ++s.identifiability_failures;
      }
    }
  }
  for (auto& s : report.summaries) {
    s.unique_recovery_rate =
        s.trials > 0 ? static_cast<double>(s.unique_recoveries) / s.trials : 0.0;
  }
  return report;
}

CurResult cur_reconstruct(const Matrix& a, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  if (k == 0 || cols.size() != rows.size()) {
    throw DimensionError("cur: row and column index sets must be nonempty and "
                         "of equal size");
  }
  auto check_indices = [](const std::vector<int>& idx, Eigen::Index limit,
                          const char* what) {
    std::set<int> seen;
    for (int i : idx) {
      if (i < 0 || i >= limit) {
        throw DimensionError(std::string("cur: ") + what + " index out of range");
      }
      if (!seen.insert(i).second) {
        throw DimensionError(std::string("cur: repeated ") + what + " index");
      }
    }
  };
  check_indices(rows, a.rows(), "row");
  check_indices(cols, a.cols(), "column");

  Matrix c(a.rows(), k), r(k, a.cols()), pivot(k, k);
  for (int q = 0; q < k; ++q) {
    c.col(q) = a.col(cols[static_cast<std::size_t>(q)]);
    r.row(q) = a.row(rows[static_cast<std::size_t>(q)]);
    for (int p = 0; p < k; ++p) {
      pivot(q, p) = a(rows[static_cast<std::size_t>(q)], cols[static_cast<std::size_t>(p)]);
    }
  }

  Eigen::JacobiSVD<Matrix> svd(pivot);
  const auto& s = svd.singularValues();
  const double cond = s(k - 1) > 0.0 ? s(0) / s(k - 1)
                                     : std::numeric_limits<double>::infinity();
  if (!(cond <= 1e12)) {
    std::string block = "rows {";
    for (int i : rows) block += " " + std::to_string(i);
    block += " } x cols {";
    for (int j : cols) block += " " + std::to_string(j);
    block += " }";
    throw SingularPivotError("cur: pivot block " + block +
                             " is singular or ill-conditioned (cond = " +
                             std::to_string(cond) + ")");
  }

  CurResult out;
  out.reconstruction = c * pivot.partialPivLu().solve(r);
  const double norm = a.norm();
  out.relative_error =
      norm > 0.0 ? (out.reconstruction - a).norm() / norm
                 : (out.reconstruction - a).norm();
  out.cross_size = static_cast<int>((a.rows() + a.cols() - k) * k);
  out.pivot_condition = cond;
  return out;
}

DegreeReport degree_experiment(const ImplicitPlaneCurve& curve, int trials,
                               std::uint64_t seed) {
  DegreeReport report;
  report.degree = curve.degree;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), "degree"));
    std::normal_distribution<double> normal(0.0, 1.0);
    // A real curve point from a random cut; retried until one is real.
    double p1 = 0.0, p2 = 0.0;
    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
      const double a1 = normal(rng), a2 = normal(rng), y = normal(rng);
      const auto cut = line_intersect(curve, make_line(a1, a2, y));
      for (const auto& ip : cut.points) {
        if (ip.point.is_real(1e-9)) {
          p1 = ip.point.x1.real();
          p2 = ip.point.x2.real();
          found = true;
          break;
        }
      }
    }
    if (!found) throw NumericalError("degree_experiment: no real curve point found");
    const double a1 = normal(rng), a2 = normal(rng);
    const auto cut = line_intersect(curve, make_line(a1, a2, a1 * p1 + a2 * p2));
    const int count = cut.bezout_count();
    report.counts.push_back(count);
    report.max_count = std::max(report.max_count, count);
    if (count != curve.degree) ++report.violations;
  }
  return report;
}

AuditReport audit_family(const MeasurementFamily& family,
                         const ParametricVariety& variety, int trials,
                         std::uint64_t seed) {
  check_compatible(variety, family);
  AuditReport report;
  report.family = family.name;
  report.ambient_dim = family.ambient_dim;
  report.irreducible_claimed = family.irreducible;

  Rng rank_rng(derive_seed(seed, 0, "audit-span"));
  report.nondegeneracy_rank =
      nondegeneracy_rank(family, 4 * family.ambient_dim, rank_rng);
  report.nondegenerate = report.nondegeneracy_rank == family.ambient_dim;

  report.min_local_rank = variety.intrinsic_dim;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), "audit-local"));
    const VarietySample sample = random_point(variety, rng);
    const auto functionals = family.sample(rng, variety.intrinsic_dim);
    const auto local = local_identifiability(variety, functionals, sample.theta);
    ++report.local_checks;
    if (local.identifiable) ++report.local_passes;
    report.min_local_rank = std::min(report.min_local_rank, local.rank);
  }
  report.locally_identifiable =
      report.local_checks > 0 && report.local_passes == report.local_checks;

  if (!family.irreducible) {
    report.warnings.push_back(
        "family '" + family.name +
        "' is not irreducible (a finite union of points); the "
        "dim + 1 identifiability guarantee does not apply");
  }
  if (!report.nondegenerate) {
    report.warnings.push_back(
        "family '" + family.name + "' spans only a " +
        std::to_string(report.nondegeneracy_rank) + "-dimensional subspace of " +
        "the " + std::to_string(family.ambient_dim) +
        "-dimensional dual space; it lies in a hyperplane");
  }
  report.hypotheses_hold =
      report.irreducible_claimed && report.nondegenerate;
  return report;
}

}  // namespace identlab
