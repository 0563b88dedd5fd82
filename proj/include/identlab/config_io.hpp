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

// JSON documents for configs and reports. Every spec object carries a
// "kind" discriminator and unknown keys are rejected with ConfigError.

#ifndef IDENTLAB_CONFIG_IO_HPP_
#define IDENTLAB_CONFIG_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "identlab/curve_lab.hpp"
#include "identlab/engine.hpp"

namespace identlab {

using Json = nlohmann::ordered_json;

VarietySpec parse_variety_spec(const Json& j);
FamilySpec parse_family_spec(const Json& j);
CurveSpec parse_curve_spec(const Json& j);
SolverOptions parse_solver_options(const Json& j);  // missing keys keep defaults
ExperimentConfig parse_experiment_config(const Json& j);

// Reads and parses a config file; ConfigError on I/O or schema problems.
ExperimentConfig load_experiment_config(const std::string& path);

// Resolved documents, defaults included.
Json to_json(const VarietySpec& spec);
Json to_json(const FamilySpec& spec);
Json to_json(const CurveSpec& spec);
Json to_json(const SolverOptions& opts);
Json to_json(const ExperimentConfig& config);

Json to_json(const MeasurementSystem& system);
MeasurementSystem parse_measurement_system(const Json& j);
Json to_json(const FiberReport& report);
Json to_json(const ExperimentReport& report);
Json to_json(const DegreeReport& report);
Json to_json(const AuditReport& report);
Json to_json(const ComplexPoint& point);
Json to_json(const LineIntersection& cut);
Json to_json(const ScanReport& scan);

// One row per (trial, measurement count); wall time only when recorded.
std::string trials_csv(const ExperimentReport& report);

// Plain CSV of reals, one matrix row per line, blank lines skipped.
Matrix parse_matrix_csv(const std::string& text);

}  // namespace identlab

#endif  // IDENTLAB_CONFIG_IO_HPP_
