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

#include "identlab/config_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace identlab {

namespace {

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
T get(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) {
    throw ConfigError(where + ": missing required key '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback, const std::string& where) {
  return j.contains(key) ? get<T>(j, key, where) : fallback;
}

std::string kind_of(const Json& j, const std::string& where) {
  require_object(j, where);
  return get<std::string>(j, "kind", where);
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

AxisBasis parse_axis(const Json& j, const std::string& where) {
  require_object(j, where);
  const auto basis = get<std::string>(j, "basis", where);
  AxisBasis axis;
  axis.lower = get_or<double>(j, "lower", -1.0, where);
  axis.upper = get_or<double>(j, "upper", 1.0, where);
  if (basis == "monomial") {
    check_keys(j, {"basis", "size", "lower", "upper"}, where);
    axis.kind = AxisBasis::Kind::kMonomial;
    axis.size = get<int>(j, "size", where);
  } else if (basis == "tabulated") {
    check_keys(j, {"basis", "knots", "values", "lower", "upper"}, where);
    axis.kind = AxisBasis::Kind::kTabulated;
    axis.knots = get<std::vector<double>>(j, "knots", where);
    axis.values = get<std::vector<std::vector<double>>>(j, "values", where);
  } else {
    throw ConfigError(where + ": unknown basis '" + basis + "'");
  }
  return axis;
}

Json axis_json(const AxisBasis& axis) {
  Json out;
  if (axis.kind == AxisBasis::Kind::kMonomial) {
    out["basis"] = "monomial";
    out["size"] = axis.size;
  } else {
    out["basis"] = "tabulated";
    out["knots"] = axis.knots;
    out["values"] = axis.values;
  }
  out["lower"] = axis.lower;
  out["upper"] = axis.upper;
  return out;
}

}  // namespace

VarietySpec parse_variety_spec(const Json& j) {
  const std::string where = "variety";
  VarietySpec spec;
  spec.kind = kind_of(j, where);
  if (spec.kind == "parabola") {
    check_keys(j, {"kind"}, where);
  } else if (spec.kind == "low_rank") {
    check_keys(j, {"kind", "d1", "d2", "k"}, where);
    spec.d1 = get<int>(j, "d1", where);
    spec.d2 = get<int>(j, "d2", where);
    spec.k = get<int>(j, "k", where);
  } else if (spec.kind == "veronese") {
    check_keys(j, {"kind", "d", "m", "model", "support", "rank"}, where);
    auto& v = spec.veronese;
    v.vars = get<int>(j, "d", where);
    v.degree = get<int>(j, "m", where);
    const auto model = get_or<std::string>(j, "model", "full", where);
    if (model == "full") {
      v.kind = VeroneseModelSpec::Kind::kFull;
    } else if (model == "sparse") {
      v.kind = VeroneseModelSpec::Kind::kSparse;
      v.support = get<std::vector<int>>(j, "support", where);
    } else if (model == "waring") {
      v.kind = VeroneseModelSpec::Kind::kWaring;
      v.rank = get<int>(j, "rank", where);
    } else {
      throw ConfigError(where + ": unknown veronese model '" + model + "'");
    }
  } else {
    throw ConfigError(where + ": unknown kind '" + spec.kind + "'");
  }
  return spec;
}

FamilySpec parse_family_spec(const Json& j) {
  const std::string where = "family";
  FamilySpec spec;
  spec.kind = kind_of(j, where);
  if (spec.kind == "gaussian") {
    check_keys(j, {"kind", "ambient_dim"}, where);
    spec.ambient_dim = get_or<int>(j, "ambient_dim", 0, where);
  } else if (spec.kind == "rank_one") {
    check_keys(j, {"kind", "d1", "d2", "normalize"}, where);
    spec.d1 = get<int>(j, "d1", where);
    spec.d2 = get<int>(j, "d2", where);
    spec.normalize = get_or<bool>(j, "normalize", true, where);
  } else if (spec.kind == "entry") {
    check_keys(j, {"kind", "d1", "d2"}, where);
    spec.d1 = get<int>(j, "d1", where);
    spec.d2 = get<int>(j, "d2", where);
  } else if (spec.kind == "evaluation") {
    check_keys(j, {"kind", "d", "m", "lifted"}, where);
    spec.vars = get<int>(j, "d", where);
    spec.degree = get<int>(j, "m", where);
    spec.lifted = get_or<bool>(j, "lifted", true, where);
  } else if (spec.kind == "tensor_feature") {
    check_keys(j, {"kind", "axes"}, where);
    const Json& axes = j.at("axes");
    if (!axes.is_array()) throw ConfigError(where + ": 'axes' must be an array");
    for (const auto& a : axes) spec.axes.push_back(parse_axis(a, where + ".axes"));
  } else if (spec.kind == "line") {
    check_keys(j, {"kind", "direction"}, where);
    spec.direction = get<std::vector<double>>(j, "direction", where);
  } else {
    throw ConfigError(where + ": unknown kind '" + spec.kind + "'");
  }
  return spec;
}

CurveSpec parse_curve_spec(const Json& j) {
  const std::string where = "curve";
  CurveSpec spec;
  spec.kind = kind_of(j, where);
  if (spec.kind == "cubic") {
    check_keys(j, {"kind", "lambda"}, where);
    spec.lambda = get<double>(j, "lambda", where);
  } else if (spec.kind == "circle" || spec.kind == "parabola") {
    check_keys(j, {"kind"}, where);
  } else if (spec.kind == "conic") {
    check_keys(j, {"kind", "coeffs"}, where);
    spec.conic = get<std::vector<double>>(j, "coeffs", where);
  } else {
    throw ConfigError(where + ": unknown kind '" + spec.kind + "'");
  }
  return spec;
}

SolverOptions parse_solver_options(const Json& j) {
  const std::string where = "solver";
  require_object(j, where);
  check_keys(j,
             {"num_starts", "max_iters", "residual_tol", "cluster_tol",
              "damping_init", "start_radius", "local_radius", "workers"},
             where);
  SolverOptions o;
  o.num_starts = get_or(j, "num_starts", o.num_starts, where);
  o.max_iters = get_or(j, "max_iters", o.max_iters, where);
  o.residual_tol = get_or(j, "residual_tol", o.residual_tol, where);
  o.cluster_tol = get_or(j, "cluster_tol", o.cluster_tol, where);
  o.damping_init = get_or(j, "damping_init", o.damping_init, where);
  o.start_radius = get_or(j, "start_radius", o.start_radius, where);
  o.local_radius = get_or(j, "local_radius", o.local_radius, where);
  o.workers = get_or(j, "workers", o.workers, where);
  o.validate();
  return o;
}

ExperimentConfig parse_experiment_config(const Json& j) {
  const std::string where = "config";
  require_object(j, where);
  check_keys(j,
             {"variety", "family", "trials", "master_seed",
              "measurement_counts", "solver", "report", "workers",
              "record_timing"},
             where);
  ExperimentConfig c;
  if (!j.contains("variety")) throw ConfigError(where + ": missing 'variety'");
  if (!j.contains("family")) throw ConfigError(where + ": missing 'family'");
  c.variety = parse_variety_spec(j.at("variety"));
  c.family = parse_family_spec(j.at("family"));
  c.trials = get_or(j, "trials", c.trials, where);
  c.master_seed = get_or<std::uint64_t>(j, "master_seed", 0, where);
  c.measurement_counts = get<std::vector<int>>(j, "measurement_counts", where);
  if (j.contains("solver")) c.solver = parse_solver_options(j.at("solver"));
  c.report = get_or<std::string>(j, "report", "", where);
  c.workers = get_or(j, "workers", c.workers, where);
  c.record_timing = get_or(j, "record_timing", c.record_timing, where);
  c.validate();
  return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_experiment_config(j);
}

Json to_json(const VarietySpec& spec) {
  Json out;
  out["kind"] = spec.kind;
  if (spec.kind == "low_rank") {
    out["d1"] = spec.d1;
    out["d2"] = spec.d2;
    out["k"] = spec.k;
  } else if (spec.kind == "veronese") {
    const auto& v = spec.veronese;
    out["d"] = v.vars;
    out["m"] = v.degree;
    switch (v.kind) {
      case VeroneseModelSpec::Kind::kFull:
        out["model"] = "full";
        break;
      case VeroneseModelSpec::Kind::kSparse:
        out["model"] = "sparse";
        out["support"] = v.support;
        break;
      case VeroneseModelSpec::Kind::kWaring:
        out["model"] = "waring";
        out["rank"] = v.rank;
        break;
    }
  }
  return out;
}

Json to_json(const FamilySpec& spec) {
  Json out;
  out["kind"] = spec.kind;
  if (spec.kind == "gaussian") {
    out["ambient_dim"] = spec.ambient_dim;
  } else if (spec.kind == "rank_one") {
    out["d1"] = spec.d1;
    out["d2"] = spec.d2;
    out["normalize"] = spec.normalize;
  } else if (spec.kind == "entry") {
    out["d1"] = spec.d1;
    out["d2"] = spec.d2;
  } else if (spec.kind == "evaluation") {
    out["d"] = spec.vars;
    out["m"] = spec.degree;
    out["lifted"] = spec.lifted;
  } else if (spec.kind == "tensor_feature") {
    out["axes"] = Json::array();
    for (const auto& a : spec.axes) out["axes"].push_back(axis_json(a));
  } else if (spec.kind == "line") {
    out["direction"] = spec.direction;
  }
  return out;
}

Json to_json(const CurveSpec& spec) {
  Json out;
  out["kind"] = spec.kind;
  if (spec.kind == "cubic") out["lambda"] = spec.lambda;
  if (spec.kind == "conic") out["coeffs"] = spec.conic;
  return out;
}

Json to_json(const SolverOptions& o) {
  Json out;
  out["num_starts"] = o.num_starts;
  out["max_iters"] = o.max_iters;
  out["residual_tol"] = o.residual_tol;
  out["cluster_tol"] = o.cluster_tol;
  out["damping_init"] = o.damping_init;
  out["start_radius"] = o.start_radius;
  out["local_radius"] = o.local_radius;
  out["workers"] = o.workers;
  return out;
}

Json to_json(const ExperimentConfig& c) {
  Json out;
  out["variety"] = to_json(c.variety);
  out["family"] = to_json(c.family);
  out["trials"] = c.trials;
  out["master_seed"] = c.master_seed;
  out["measurement_counts"] = c.measurement_counts;
  out["solver"] = to_json(c.solver);
  out["report"] = c.report;
  out["workers"] = c.workers;
  out["record_timing"] = c.record_timing;
  return out;
}

Json to_json(const MeasurementSystem& system) {
  Json out = Json::array();
  for (int i = 0; i < system.size(); ++i) {
    const auto& f = system.functionals[static_cast<std::size_t>(i)];
    Json entry;
    entry["coeffs"] = vector_json(f.coeffs);
    entry["provenance"] = {{"family", f.provenance.family},
                           {"sample", f.provenance.sample}};
    entry["value"] = system.values(i);
    out.push_back(entry);
  }
  return out;
}

MeasurementSystem parse_measurement_system(const Json& j) {
  const std::string where = "measurement system";
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  MeasurementSystem sys;
  sys.values.resize(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& entry : j) {
    require_object(entry, where);
    check_keys(entry, {"coeffs", "provenance", "value"}, where);
    LinearFunctional f;
    const auto coeffs = get<std::vector<double>>(entry, "coeffs", where);
    f.coeffs = Eigen::Map<const Vector>(coeffs.data(),
                                        static_cast<Eigen::Index>(coeffs.size()));
    if (entry.contains("provenance")) {
      const Json& p = entry.at("provenance");
      require_object(p, where);
      check_keys(p, {"family", "sample"}, where);
      f.provenance.family = get_or<std::string>(p, "family", "", where);
      f.provenance.sample =
          get_or<std::vector<double>>(p, "sample", std::vector<double>{}, where);
    }
    sys.values(i++) = get<double>(entry, "value", where);
    sys.functionals.push_back(std::move(f));
  }
  return sys;
}

Json to_json(const FiberReport& report) {
  Json out;
  out["cardinality"] = report.cardinality();
  out["points"] = Json::array();
  for (const auto& p : report.points) out["points"].push_back(vector_json(p));
  out["residuals"] = report.residuals;
  out["basin_counts"] = report.basin_counts;
  out["failed_starts"] = report.failed_starts;
  out["contains_target"] = report.contains_target();
  out["target_index"] =
      report.target_index ? Json(*report.target_index) : Json(nullptr);
  out["min_pairwise_distance"] = finite_or_null(report.min_pairwise_distance());
  return out;
}

Json to_json(const ExperimentReport& report) {
  Json out;
  out["config"] = to_json(report.config);
  out["summaries"] = Json::array();
  for (const auto& s : report.summaries) {
    Json js;
    js["measurements"] = s.measurements;
    js["trials"] = s.trials;
    js["unique_recoveries"] = s.unique_recoveries;
    js["unique_recovery_rate"] = s.unique_recovery_rate;
    Json hist = Json::object();
    for (const auto& [card, count] : s.cardinality_histogram) {
      hist[std::to_string(card)] = count;
    }
    js["cardinality_histogram"] = hist;
    js["solver_failures"] = s.solver_failures;
    js["identifiability_failures"] = s.identifiability_failures;
    out["summaries"].push_back(js);
  }
  return out;
}

Json to_json(const DegreeReport& report) {
  Json out;
  out["degree"] = report.degree;
  out["trials"] = report.counts.size();
  out["violations"] = report.violations;
  out["max_count"] = report.max_count;
  out["counts"] = report.counts;
  return out;
}

Json to_json(const AuditReport& r) {
  Json out;
  out["family"] = r.family;
  out["ambient_dim"] = r.ambient_dim;
  out["nondegeneracy_rank"] = r.nondegeneracy_rank;
  out["nondegenerate"] = r.nondegenerate;
  out["local_checks"] = r.local_checks;
  out["local_passes"] = r.local_passes;
  out["min_local_rank"] = r.min_local_rank;
  out["locally_identifiable"] = r.locally_identifiable;
  out["irreducible_claimed"] = r.irreducible_claimed;
  out["hypotheses_hold"] = r.hypotheses_hold;
  out["warnings"] = r.warnings;
  return out;
}

Json to_json(const ComplexPoint& p) {
  auto c = [](double v) { return v + 0.0; };  // drops negative zero
  return Json{{"x1", {c(p.x1.real()), c(p.x1.imag())}},
              {"x2", {c(p.x2.real()), c(p.x2.imag())}}};
}

Json to_json(const LineIntersection& cut) {
  Json out;
  out["points"] = Json::array();
  for (const auto& ip : cut.points) {
    Json jp = to_json(ip.point);
    jp["multiplicity"] = ip.multiplicity;
    jp["real"] = ip.point.is_real();
    out["points"].push_back(jp);
  }
  out["distinct_count"] = cut.distinct_count();
  out["infinity_count"] = cut.infinity_count;
  out["bezout_count"] = cut.bezout_count();
  return out;
}

Json to_json(const ScanReport& scan) {
  Json out;
  out["directions"] = scan.angles.size();
  out["min_count"] = scan.min_count;
  out["max_count"] = scan.max_count;
  out["angles"] = scan.angles;
  out["distinct_counts"] = scan.distinct_counts;
  return out;
}

std::string trials_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "trial,seed,measurements,cardinality,target_recovered,unique_recovery,"
         "min_pairwise_distance,failed_starts";
  if (report.config.record_timing) out << ",wall_seconds";
  out << "\n";
  for (const auto& r : report.records) {
    out << r.trial << ',' << r.seed << ',' << r.measurements << ','
        << r.cardinality << ',' << (r.target_recovered ? 1 : 0) << ','
        << (r.unique_recovery ? 1 : 0) << ',';
    if (std::isfinite(r.min_pairwise_distance)) {
      out << r.min_pairwise_distance;
    } else {
      out << "inf";
    }
    out << ',' << r.failed_starts;
    if (report.config.record_timing) out << ',' << r.wall_seconds;
    out << "\n";
  }
  return out.str();
}

Matrix parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) {
          throw std::invalid_argument("trailing characters");
        }
      } catch (const std::exception&) {
        throw ConfigError("matrix csv: bad number '" + cell + "' on line " +
                          std::to_string(line_no));
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ConfigError("matrix csv: ragged row on line " + std::to_string(line_no));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("matrix csv: no rows");
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

}  // namespace identlab
