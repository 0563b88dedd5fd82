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


#include "identlab/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "identlab/config_io.hpp"
#include "identlab/curve_lab.hpp"
#include "identlab/engine.hpp"

namespace identlab {

namespace {

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string out_dir;
  bool verbose = false;

  // curve
  std::string curve_kind = "cubic";
  double lambda = 2.0;
  std::vector<double> conic;
  std::vector<double> line;
  std::vector<double> point;
  int directions = 360;
  int samples = 400;
  int workers = 1;

  // fiber
  int trial = 0;

  // cur
  std::string matrix_path;
  std::vector<int> rows;
  std::vector<int> cols;
};

class Emitter {
 public:
  Emitter(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void prepare() const {
    if (opts_.out_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(opts_.out_dir, ec);
    if (ec || !std::filesystem::is_directory(opts_.out_dir)) {
      throw ConfigError("cannot create output directory '" + opts_.out_dir + "'");
    }
  }

  void write(const std::string& name, const std::string& text) const {
    out_ << text;
    if (!text.empty() && text.back() != '\n') out_ << '\n';
    if (!opts_.out_dir.empty()) write_file(name, text);
  }

  void write_file(const std::string& name, const std::string& text) const {
    const auto path = std::filesystem::path(opts_.out_dir) / name;
    write_path(path.string(), text);
  }

  static void write_path(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
    if (!file) throw ConfigError("cannot write '" + path + "'");
  }

 private:
  const Options& opts_;
  std::ostream& out_;
};

std::string dump(const Json& j) { return j.dump(2); }

ExperimentConfig resolved_config(const Options& opts) {
  if (opts.config_path.empty()) throw ConfigError("--config is required");
  ExperimentConfig config = load_experiment_config(opts.config_path);
  if (opts.seed) config.master_seed = *opts.seed;
  if (opts.trials) config.trials = *opts.trials;
  config.validate();
  return config;
}

CurveSpec curve_spec(const Options& opts) {
  CurveSpec spec;
  spec.kind = opts.curve_kind;
  spec.lambda = opts.lambda;
  spec.conic = opts.conic;
  if (spec.kind == "conic" && spec.conic.size() != 6) {
    throw ConfigError("--conic needs six coefficients c00,c10,c01,c20,c11,c02");
  }
  return spec;
}

Json curve_config(const std::string& action, const Options& opts) {
  Json j;
  j["command"] = "curve " + action;
  j["curve"] = to_json(curve_spec(opts));
  return j;
}

std::vector<int> to_zero_based(const std::vector<int>& one_based,
                               const char* what) {
  std::vector<int> out;
  for (int v : one_based) {
    if (v < 1) throw ConfigError(std::string(what) + " indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

int cmd_identify(const Options& opts, const Emitter& emit, std::ostream& err) {
  const ExperimentConfig config = resolved_config(opts);
  emit.prepare();
  if (opts.verbose) {
    err << "identify: " << config.trials << " trials, seed "
        << config.master_seed << "\n";
  }
  const ExperimentReport report = run_trials(config);
  const std::string doc = dump(to_json(report));
  emit.write("report.json", doc);
  if (!opts.out_dir.empty()) emit.write_file("trials.csv", trials_csv(report));
  if (!config.report.empty()) Emitter::write_path(config.report, doc);
  if (opts.verbose) {
    for (const auto& s : report.summaries) {
      err << "m=" << s.measurements << " unique-recovery rate "
          << s.unique_recovery_rate << "\n";
    }
  }
  return kExitOk;
}

int cmd_fiber(const Options& opts, const Emitter& emit, std::ostream& err) {
  const ExperimentConfig config = resolved_config(opts);
  if (opts.trial < 0) throw ConfigError("--trial must be nonnegative");
  emit.prepare();
  const ParametricVariety variety = build_variety(config.variety);
  const MeasurementFamily family =
      build_family(config.family, variety.ambient_dim);
  if (family.ambient_dim != variety.ambient_dim) {
    throw DimensionError("family dimension " + std::to_string(family.ambient_dim) +
                         " differs from variety dimension " +
                         std::to_string(variety.ambient_dim));
  }
  const TrialSetup setup = draw_trial(config, variety, family, opts.trial);
  const FiberTarget target{setup.sample.theta, setup.sample.x};
  Json doc;
  doc["config"] = to_json(config);
  doc["trial"] = opts.trial;
  doc["seed"] = setup.seed;
  Json jt;
  jt["theta"] = std::vector<double>(target.theta.data(),
                                    target.theta.data() + target.theta.size());
  jt["x"] = std::vector<double>(target.x.data(), target.x.data() + target.x.size());
  doc["target"] = jt;
  doc["measurements"] = to_json(setup.system);
  doc["fibers"] = Json::array();
  for (int m : config.measurement_counts) {
    const FiberReport fiber = enumerate_fiber(
        variety, setup.system.prefix(m), config.solver, setup.start_seed, target);
    if (opts.verbose) {
      err << "m=" << m << " fiber cardinality " << fiber.cardinality() << "\n";
    }
    Json jf = to_json(fiber);
    jf["measurements"] = m;
    doc["fibers"].push_back(jf);
  }
  emit.write("fiber.json", dump(doc));
  return kExitOk;
}

int cmd_curve_intersect(const Options& opts, const Emitter& emit) {
  if (opts.line.size() != 3) throw ConfigError("--line needs a1,a2,y");
  const ImplicitPlaneCurve curve = build_curve(curve_spec(opts));
  emit.prepare();
  const AffineLine line = make_line(opts.line[0], opts.line[1], opts.line[2]);
  Json doc;
  doc["config"] = curve_config("intersect", opts);
  doc["config"]["line"] = opts.line;
  doc["intersection"] = to_json(line_intersect(curve, line));
  emit.write("intersect.json", dump(doc));
  return kExitOk;
}

int cmd_curve_inflections(const Options& opts, const Emitter& emit) {
  const ImplicitPlaneCurve curve = build_curve(curve_spec(opts));
  emit.prepare();
  const auto points = inflection_points(curve);
  Json doc;
  doc["config"] = curve_config("inflections", opts);
  doc["count"] = points.size();
  int real = 0;
  doc["points"] = Json::array();
  for (const auto& p : points) {
    Json jp = to_json(p.point);
    jp["real"] = p.real;
    real += p.real ? 1 : 0;
    doc["points"].push_back(jp);
  }
  doc["real_count"] = real;
  emit.write("inflections.json", dump(doc));
  return kExitOk;
}

int cmd_curve_scan(const Options& opts, const Emitter& emit) {
  if (opts.point.size() != 2) throw ConfigError("--point needs p1,p2");
  if (opts.directions < 1) throw ConfigError("--directions must be positive");
  if (opts.workers < 1) throw ConfigError("--workers must be positive");
  const ImplicitPlaneCurve curve = build_curve(curve_spec(opts));
  emit.prepare();
  const ScanReport scan = single_measurement_scan(
      curve, opts.point[0], opts.point[1], opts.directions, opts.workers);
  Json doc;
  doc["config"] = curve_config("scan", opts);
  doc["config"]["point"] = opts.point;
  doc["config"]["directions"] = opts.directions;
  doc["scan"] = to_json(scan);
  emit.write("scan.json", dump(doc));
  return kExitOk;
}

int cmd_curve_figure(const Options& opts, const Emitter& emit) {
  if (opts.curve_kind != "cubic") {
    throw ConfigError("curve figure supports the cubic only");
  }
  if (opts.samples < 2) throw ConfigError("--samples must be at least 2");
  build_curve(curve_spec(opts));
  emit.prepare();
  Json config = curve_config("figure", opts);
  config["samples"] = opts.samples;
  std::ostringstream csv;
  csv.precision(17);
  csv << "# config: " << config.dump() << "\n";
  csv << "label,x1,x2\n";
  for (const auto& row : cubic_figure_data(opts.lambda, opts.samples)) {
    csv << row.label << ',' << row.x1 << ',' << row.x2 << "\n";
  }
  emit.write("figure.csv", csv.str());
  return kExitOk;
}

int cmd_cur(const Options& opts, const Emitter& emit, std::ostream& err) {
  if (opts.matrix_path.empty()) throw ConfigError("--matrix is required");
  std::ifstream in(opts.matrix_path);
  if (!in) throw ConfigError("cannot open matrix file '" + opts.matrix_path + "'");
  std::stringstream text;
  text << in.rdbuf();
  const Matrix a = parse_matrix_csv(text.str());
  const auto rows = to_zero_based(opts.rows, "--rows");
  const auto cols = to_zero_based(opts.cols, "--cols");
  emit.prepare();
  const CurResult result = cur_reconstruct(a, rows, cols);
  Json doc;
  doc["config"] = {{"command", "cur"},
                   {"matrix", opts.matrix_path},
                   {"rows", opts.rows},
                   {"cols", opts.cols},
                   {"shape", {a.rows(), a.cols()}}};
  doc["relative_error"] = result.relative_error;
  doc["cross_size"] = result.cross_size;
  doc["pivot_condition"] = result.pivot_condition;
  if (opts.verbose) {
    err << "cur: relative error " << result.relative_error << "\n";
  }
  emit.write("cur.json", dump(doc));
  return kExitOk;
}

int cmd_audit(const Options& opts, const Emitter& emit) {
  const ExperimentConfig config = resolved_config(opts);
  emit.prepare();
  const ParametricVariety variety = build_variety(config.variety);
  const MeasurementFamily family =
      build_family(config.family, variety.ambient_dim);
  const AuditReport audit =
      audit_family(family, variety, config.trials, config.master_seed);
  Json doc;
  doc["config"] = to_json(config);
  doc["audit"] = to_json(audit);
  emit.write("audit.json", dump(doc));
  return kExitOk;
}

void add_common(CLI::App* app, Options& opts) {
  app->add_option("--seed", opts.seed, "Master seed override");
  app->add_option("--out", opts.out_dir, "Output directory");
  app->add_flag("--verbose,-v", opts.verbose, "Progress on standard error");
}

void add_curve_flags(CLI::App* app, Options& opts) {
  add_common(app, opts);
  app->add_option("--curve", opts.curve_kind, "cubic | circle | parabola | conic")
      ->check(CLI::IsMember({"cubic", "circle", "parabola", "conic"}));
  app->add_option("--lambda", opts.lambda, "Cubic parameter");
  app->add_option("--conic", opts.conic, "c00,c10,c01,c20,c11,c02")
      ->delimiter(',');
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Options opts;
  CLI::App app{"Identifiability experiments for structured linear measurements",
               "identlab"};
  app.require_subcommand(1, 1);

  auto* identify = app.add_subcommand("identify", "Seeded recovery trials");
  identify->add_option("--config", opts.config_path, "Experiment config (JSON)");
  identify->add_option("--trials", opts.trials, "Trial count override");
  add_common(identify, opts);

  auto* fiber = app.add_subcommand("fiber", "Fibers of a single trial");
  fiber->add_option("--config", opts.config_path, "Experiment config (JSON)");
  fiber->add_option("--trial", opts.trial, "Trial index");
  fiber->add_option("--trials", opts.trials, "Trial count override");
  add_common(fiber, opts);

  auto* curve = app.add_subcommand("curve", "Plane curve computations");
  curve->require_subcommand(1, 1);
  auto* intersect = curve->add_subcommand("intersect", "Cut with a line");
  add_curve_flags(intersect, opts);
  intersect->add_option("--line", opts.line, "a1,a2,y for a1 x1 + a2 x2 = y")
      ->delimiter(',')
      ->required();
  auto* inflections = curve->add_subcommand("inflections", "Inflection points");
  add_curve_flags(inflections, opts);
  auto* scan = curve->add_subcommand("scan", "Single-measurement direction scan");
  add_curve_flags(scan, opts);
  scan->add_option("--point", opts.point, "p1,p2 on the curve")
      ->delimiter(',')
      ->required();
  scan->add_option("--directions", opts.directions, "Number of directions");
  scan->add_option("--workers", opts.workers, "Worker threads");
  auto* figure = curve->add_subcommand("figure", "Plot data for the cubic");
  add_curve_flags(figure, opts);
  figure->add_option("--samples", opts.samples, "Vertical cuts");

  auto* cur = app.add_subcommand("cur", "Cross reconstruction of a matrix");
  cur->add_option("--matrix", opts.matrix_path, "CSV matrix file")->required();
  cur->add_option("--rows", opts.rows, "Row indices I (1-based)")
      ->delimiter(',')
      ->required();
  cur->add_option("--cols", opts.cols, "Column indices J (1-based)")
      ->delimiter(',')
      ->required();
  add_common(cur, opts);

  auto* audit = app.add_subcommand("audit", "Check measurement hypotheses");
  audit->add_option("--config", opts.config_path, "Experiment config (JSON)");
  audit->add_option("--trials", opts.trials, "Local checks");
  add_common(audit, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  const Emitter emit(opts, out);
  try {
    if (*identify) return cmd_identify(opts, emit, err);
    if (*fiber) return cmd_fiber(opts, emit, err);
    if (*intersect) return cmd_curve_intersect(opts, emit);
    if (*inflections) return cmd_curve_inflections(opts, emit);
    if (*scan) return cmd_curve_scan(opts, emit);
    if (*figure) return cmd_curve_figure(opts, emit);
    if (*cur) return cmd_cur(opts, emit, err);
    if (*audit) return cmd_audit(opts, emit);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << "\n";
    return kExitDimension;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfig;
}

}  // namespace identlab
