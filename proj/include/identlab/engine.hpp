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

#ifndef IDENTLAB_ENGINE_HPP_
#define IDENTLAB_ENGINE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "identlab/curve_lab.hpp"
#include "identlab/fiber_solver.hpp"
#include "identlab/measurements.hpp"
#include "identlab/varieties.hpp"

namespace identlab {

struct VarietySpec {
  std::string kind = "parabola";  // parabola | low_rank | veronese
  int d1 = 0, d2 = 0, k = 0;      // low_rank
  VeroneseModelSpec veronese;     // veronese
};

struct FamilySpec {
  // gaussian | rank_one | entry | evaluation | tensor_feature | line
  std::string kind = "gaussian";
  int ambient_dim = 0;  // gaussian; 0 means "match the variety"
  int d1 = 0, d2 = 0;   // rank_one, entry
  bool normalize = true;
  int vars = 0, degree = 0;  // evaluation
  bool lifted = true;
  std::vector<AxisBasis> axes;  // tensor_feature
  std::vector<double> direction;  // line
};

struct CurveSpec {
  std::string kind = "cubic";  // cubic | circle | parabola | conic
  double lambda = 2.0;
  std::vector<double> conic;  // c00 c10 c01 c20 c11 c02
};

ParametricVariety build_variety(const VarietySpec& spec);
// ambient_hint fills in a gaussian family's dimension when left at 0.
MeasurementFamily build_family(const FamilySpec& spec, int ambient_hint);
ImplicitPlaneCurve build_curve(const CurveSpec& spec);

struct ExperimentConfig {
  VarietySpec variety;
  FamilySpec family;
  int trials = 100;
  std::uint64_t master_seed = 0;
  std::vector<int> measurement_counts;
  SolverOptions solver;
  std::string report;  // output path for the JSON report, may be empty
  int workers = 1;     // parallel trials
  bool record_timing = false;  // wall times make reports non-reproducible

  void validate() const;  // ConfigError
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int measurements = 0;
  int cardinality = 0;
  bool target_recovered = false;
  bool unique_recovery = false;
  double min_pairwise_distance = 0.0;  // +inf for fewer than two points
  int failed_starts = 0;
  double wall_seconds = 0.0;
};

struct CountSummary {
  int measurements = 0;
  int trials = 0;
  int unique_recoveries = 0;
  double unique_recovery_rate = 0.0;
  std::map<int, int> cardinality_histogram;
  // Target missing from the reported fiber: a numerical-method failure.
  int solver_failures = 0;
  // Target found but other points remain: the data does not identify x.
  int identifiability_failures = 0;

  double cardinality_rate(int cardinality) const;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CountSummary> summaries;  // one per measurement count
  std::vector<TrialRecord> records;     // sorted by (trial, measurements)

  const CountSummary& summary_for(int measurements) const;
};

struct TrialSetup {
  std::uint64_t seed = 0;
  VarietySample sample;
  MeasurementSystem system;  // max(measurement_counts) functionals
  std::uint64_t start_seed = 0;
};

// The point, functionals and solver seed of one trial; independent of every
// other trial and of scheduling.
TrialSetup draw_trial(const ExperimentConfig& config,
                      const ParametricVariety& variety,
                      const MeasurementFamily& family, int trial);

// Per trial: x from random_point, max(counts) functionals from the family,
// and for each count m the fiber of the length-m prefix with the target
// supplied. Streams come from derive_seed(master_seed, trial, purpose).
// Throws DimensionError when family and variety dimensions differ.
ExperimentReport run_trials(const ExperimentConfig& config);

struct CurResult {
  Matrix reconstruction;
  double relative_error = 0.0;  // Frobenius, against the input
  int cross_size = 0;           // (d1 + d2 - k) k
  double pivot_condition = 0.0;
};

class SingularPivotError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A_J (A^I_J)^{-1} A^I with 0-based index sets of equal size k. Throws
// SingularPivotError when cond(A^I_J) > 1e12.
CurResult cur_reconstruct(const Matrix& a, const std::vector<int>& rows,
                          const std::vector<int>& cols);

struct DegreeReport {
  int degree = 0;
  std::vector<int> counts;  // Bezout count per trial
  int violations = 0;       // counts != degree
  int max_count = 0;
};

// Random real curve points, random lines through them, affine points with
// multiplicity plus points at infinity.
DegreeReport degree_experiment(const ImplicitPlaneCurve& curve, int trials,
                               std::uint64_t seed);

struct AuditReport {
  std::string family;
  int ambient_dim = 0;
  int nondegeneracy_rank = 0;
  bool nondegenerate = false;
  int local_checks = 0;
  int local_passes = 0;
  int min_local_rank = 0;
  bool locally_identifiable = false;
  bool irreducible_claimed = true;
  bool hypotheses_hold = false;
  std::vector<std::string> warnings;
};

AuditReport audit_family(const MeasurementFamily& family,
                         const ParametricVariety& variety, int trials,
                         std::uint64_t seed);

}  // namespace identlab

#endif  // IDENTLAB_ENGINE_HPP_
