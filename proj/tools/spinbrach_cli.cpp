// Copyright 2026 The spinbrach authors
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
//
// spinbrach command line: rotational-manifold geometry and time-optimal
// state transfer for arbitrary spin, as scriptable JSON/CSV commands.
//
// Exit codes: 0 success, 2 argument validation, 3 domain infeasibility.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinbrach/brachistochrone.hpp"
#include "spinbrach/evolution.hpp"
#include "spinbrach/fubini_study.hpp"
#include "spinbrach/rotor.hpp"
#include "spinbrach/spin_algebra.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace spinbrach;

constexpr double kPi = std::numbers::pi;

struct RunConfig {
  double gamma = 1.0;
  std::string format;  // "json" or "csv"; empty = command default
  int precision = 12;
  std::string output_path;
  bool degrees = false;

  double angle(double value) const { return degrees ? value * kPi / 180.0 : value; }

  std::string format_or(const std::string& fallback) const {
    return format.empty() ? fallback : format;
  }
};

// Numbers are rounded to the configured significant digits before they are
// serialized, so JSON output re-parses to exactly the printed precision and
// identical invocations are byte-identical.
double round_sig(double x, int precision) {
  if (x == 0.0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return std::strtod(buf, nullptr);
}

std::string fmt_sig(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x == 0.0 ? 0.0 : x);
  return buf;
}

json complex_pair(Complex z, int precision) {
  return json::array({round_sig(z.real(), precision), round_sig(z.imag(), precision)});
}

json matrix_json(const OperatorMatrix& matrix, int precision) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      row.push_back(complex_pair(matrix(r, c), precision));
    }
    rows.push_back(row);
  }
  return rows;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + cfg.output_path);
  }
  out << text;
}

void emit_json(const RunConfig& cfg, const json& value) {
  emit(cfg, value.dump(2) + "\n");
}

class CsvWriter {
 public:
  explicit CsvWriter(int precision) : precision_(precision) {}

  void header(const std::vector<std::string>& names) {
    join(names);
  }

  void row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(fmt_sig(v, precision_));
    join(cells);
  }

  std::string str() const { return out_.str(); }

 private:
  void join(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ostringstream out_;
  int precision_;
};

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

void cmd_operators(const RunConfig& cfg, const std::string& spin_text) {
  const HalfInt s = HalfInt::parse(spin_text);
  validate_spin(s);
  if (cfg.format_or("json") != "json") {
    throw std::invalid_argument("operators supports only --format json");
  }
  const SpinOperators ops = spin_operators(s);
  json out;
  out["s"] = round_sig(s.value(), cfg.precision);
  out["dim"] = dimension(s);
  out["sx"] = matrix_json(ops.sx, cfg.precision);
  out["sy"] = matrix_json(ops.sy, cfg.precision);
  out["sz"] = matrix_json(ops.sz, cfg.precision);
  emit_json(cfg, out);
}

void cmd_metric(const RunConfig& cfg, const std::string& spin_text,
                const std::string& proj_text, double theta) {
  const HalfInt s = HalfInt::parse(spin_text);
  const HalfInt m = HalfInt::parse(proj_text);
  validate_projection(s, m);
  theta = cfg.angle(theta);

  const MetricTensor2 numeric = metric_tensor_numeric(s, m, theta, 0.0, cfg.gamma);
  const MetricTensor2 closed = metric_tensor_closed(s, m, theta, cfg.gamma);
  const double max_abs_dev =
      std::max({std::abs(numeric.g_tt - closed.g_tt), std::abs(numeric.g_tp - closed.g_tp),
                std::abs(numeric.g_pp - closed.g_pp)});
  const double radius = manifold_radius(s, m, cfg.gamma);

  if (cfg.format_or("json") == "csv") {
    CsvWriter csv(cfg.precision);
    csv.header({"g_tt", "g_tp", "g_pp", "closed_g_tt", "closed_g_tp", "closed_g_pp",
                "max_abs_dev", "radius"});
    csv.row({numeric.g_tt, numeric.g_tp, numeric.g_pp, closed.g_tt, closed.g_tp,
             closed.g_pp, max_abs_dev, radius});
    emit(cfg, csv.str());
    return;
  }
  json out;
  out["g_tt"] = round_sig(numeric.g_tt, cfg.precision);
  out["g_tp"] = round_sig(numeric.g_tp, cfg.precision);
  out["g_pp"] = round_sig(numeric.g_pp, cfg.precision);
  out["closed_form"] = {{"g_tt", round_sig(closed.g_tt, cfg.precision)},
                        {"g_tp", round_sig(closed.g_tp, cfg.precision)},
                        {"g_pp", round_sig(closed.g_pp, cfg.precision)}};
  out["max_abs_dev"] = round_sig(max_abs_dev, cfg.precision);
  out["radius"] = round_sig(radius, cfg.precision);
  emit_json(cfg, out);
}

void cmd_evolve(const RunConfig& cfg, const std::string& spin_text,
                const std::string& proj_text, double field_theta, double field_phi,
                double omega, double total_time, int steps) {
  const HalfInt s = HalfInt::parse(spin_text);
  const HalfInt m = HalfInt::parse(proj_text);
  validate_projection(s, m);
  if (total_time < 0.0) {
    throw std::invalid_argument("--t must be non-negative");
  }
  const FieldSpec field{omega, {cfg.angle(field_theta), cfg.angle(field_phi)}};
  validate_field(field);

  const StateVector initial = basis_eigenstate(s, m);
  const int dim = dimension(s);

  struct Row {
    double t;
    StateVector state;
    Direction angles;
    double fidelity;
    double beta;
  };
  std::vector<Row> rows;
  rows.reserve(steps);
  for (int j = 1; j <= steps; ++j) {
    const double t = total_time * j / steps;
    Row row;
    row.t = t;
    row.state = evolve(initial, s, field, t);
    row.angles = evolved_angles(field, t);
    const StateVector reference =
        rotate_eigenstate(s, m, row.angles.theta, row.angles.phi);
    const Complex overlap = reference.dot(row.state);
    row.fidelity = std::abs(overlap);
    row.beta = std::arg(overlap);
    if (row.beta <= -kPi) row.beta += 2.0 * kPi;
    rows.push_back(std::move(row));
  }

  if (cfg.format_or("csv") == "json") {
    json out = json::array();
    for (const Row& row : rows) {
      json amplitudes = json::array();
      for (int i = 0; i < dim; ++i) amplitudes.push_back(complex_pair(row.state(i), cfg.precision));
      out.push_back({{"t", round_sig(row.t, cfg.precision)},
                     {"amplitudes", amplitudes},
                     {"predicted_theta", round_sig(row.angles.theta, cfg.precision)},
                     {"predicted_phi", round_sig(row.angles.phi, cfg.precision)},
                     {"residency_fidelity", round_sig(row.fidelity, cfg.precision)},
                     {"phase_beta", round_sig(row.beta, cfg.precision)}});
    }
    emit_json(cfg, out);
    return;
  }

  CsvWriter csv(cfg.precision);
  std::vector<std::string> names{"t"};
  for (int i = 0; i < dim; ++i) {
    names.push_back("re" + std::to_string(i));
    names.push_back("im" + std::to_string(i));
  }
  names.insert(names.end(),
               {"predicted_theta", "predicted_phi", "residency_fidelity", "phase_beta"});
  csv.header(names);
  for (const Row& row : rows) {
    std::vector<double> cells{row.t};
    for (int i = 0; i < dim; ++i) {
      cells.push_back(row.state(i).real());
      cells.push_back(row.state(i).imag());
    }
    cells.insert(cells.end(),
                 {row.angles.theta, row.angles.phi, row.fidelity, row.beta});
    csv.row(cells);
  }
  emit(cfg, csv.str());
}

void cmd_brach(const RunConfig& cfg, const std::string& spin_text,
               const std::string& proj_text, double theta_f, double phi_f, double omega,
               bool has_tilt, double field_theta) {
  const HalfInt s = HalfInt::parse(spin_text);
  const HalfInt m = HalfInt::parse(proj_text);
  TransferProblem problem{s, m, cfg.angle(theta_f), cfg.angle(phi_f), omega, cfg.gamma};
  const TransferSolution solution = has_tilt
                                        ? constrained_transfer(problem, cfg.angle(field_theta))
                                        : optimal_transfer(problem);

  if (cfg.format_or("json") == "csv") {
    CsvWriter csv(cfg.precision);
    csv.header({"field_theta", "field_phi", "time", "path_length", "speed", "arc_angle",
                "circle_radius"});
    csv.row({solution.field.direction.theta, solution.field.direction.phi, solution.time,
             solution.path_length, solution.speed, solution.arc_angle,
             solution.circle_radius});
    emit(cfg, csv.str());
    return;
  }
  json out;
  out["field"] = {{"theta", round_sig(solution.field.direction.theta, cfg.precision)},
                  {"phi", round_sig(solution.field.direction.phi, cfg.precision)}};
  out["time"] = round_sig(solution.time, cfg.precision);
  out["path_length"] = round_sig(solution.path_length, cfg.precision);
  out["speed"] = round_sig(solution.speed, cfg.precision);
  out["arc_angle"] = round_sig(solution.arc_angle, cfg.precision);
  out["circle_radius"] = round_sig(solution.circle_radius, cfg.precision);
  emit_json(cfg, out);
}

void cmd_sweep(const RunConfig& cfg, const std::string& spin_text,
               const std::string& proj_text, double theta_f, double omega, int grid) {
  const HalfInt s = HalfInt::parse(spin_text);
  const HalfInt m = HalfInt::parse(proj_text);
  TransferProblem problem{s, m, cfg.angle(theta_f), 0.0, omega, cfg.gamma};
  const std::vector<TiltSample> rows = sweep_tilt(problem, grid);

  if (cfg.format_or("csv") == "json") {
    json out = json::array();
    for (const TiltSample& row : rows) {
      out.push_back({{"theta_prime", round_sig(row.theta_prime, cfg.precision)},
                     {"time", round_sig(row.time, cfg.precision)},
                     {"speed", round_sig(row.speed, cfg.precision)},
                     {"path_length", round_sig(row.path_length, cfg.precision)}});
    }
    emit_json(cfg, out);
    return;
  }
  CsvWriter csv(cfg.precision);
  csv.header({"theta_prime", "time", "speed", "path_length"});
  for (const TiltSample& row : rows) {
    csv.row({row.theta_prime, row.time, row.speed, row.path_length});
  }
  emit(cfg, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotational-manifold geometry and time-optimal spin transfer"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--gamma", cfg.gamma, "Fubini-Study scale factor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", cfg.precision, "Significant decimal digits")
      ->check(CLI::Range(4, 17))
      ->capture_default_str();
  app.add_option("--output", cfg.output_path, "Write output to a file instead of stdout");
  app.add_flag("--degrees", cfg.degrees, "Interpret input angles as degrees");

  std::string spin_text, proj_text;
  double theta = kPi / 2.0, field_theta = 0.0, field_phi = 0.0;
  double omega = 1.0, total_time = 0.0, theta_f = 0.0, phi_f = 0.0;
  int steps = 100, grid = 101;
  bool has_field_theta = false;

  CLI::App* operators = app.add_subcommand("operators", "Print sx, sy, sz for spin s");
  operators->fallthrough();
  operators->add_option("--s", spin_text, "Spin (integer, decimal, or fraction)")->required();

  CLI::App* metric = app.add_subcommand(
      "metric", "Fubini-Study metric of the (s, m) rotational manifold");
  metric->fallthrough();
  metric->add_option("--s", spin_text, "Spin")->required();
  metric->add_option("--m", proj_text, "Projection")->required();
  metric->add_option("--theta", theta, "Polar angle of the evaluation point")
      ->capture_default_str();

  CLI::App* evolve_cmd = app.add_subcommand(
      "evolve", "Trace exact evolution of |m> under a static field");
  evolve_cmd->fallthrough();
  evolve_cmd->add_option("--s", spin_text, "Spin")->required();
  evolve_cmd->add_option("--m", proj_text, "Projection")->required();
  evolve_cmd->add_option("--field-theta", field_theta, "Field polar angle")->required();
  evolve_cmd->add_option("--field-phi", field_phi, "Field azimuth")->capture_default_str();
  evolve_cmd->add_option("--omega", omega, "Field strength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evolve_cmd->add_option("--t", total_time, "Total evolution time")->required();
  evolve_cmd->add_option("--steps", steps, "Number of trace rows")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();

  CLI::App* brach = app.add_subcommand(
      "brach", "Minimal-time transfer from |m> to the target at (theta_f, phi_f)");
  brach->fallthrough();
  brach->add_option("--s", spin_text, "Spin")->required();
  brach->add_option("--m", proj_text, "Projection")->required();
  brach->add_option("--theta-f", theta_f, "Angular separation of the target")->required();
  brach->add_option("--phi-f", phi_f, "Target azimuth")->capture_default_str();
  brach->add_option("--omega", omega, "Field strength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  brach->add_option("--field-theta", field_theta,
                    "Hold the field tilt here instead of the optimum pi/2");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Transfer time/speed/path across field tilts");
  sweep->fallthrough();
  sweep->add_option("--s", spin_text, "Spin")->required();
  sweep->add_option("--m", proj_text, "Projection")->required();
  sweep->add_option("--theta-f", theta_f, "Angular separation of the target")->required();
  sweep->add_option("--omega", omega, "Field strength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--grid", grid, "Number of tilt samples")
      ->check(CLI::Range(3, 10000000))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    has_field_theta = brach->count("--field-theta") > 0;
    if (operators->parsed()) {
      cmd_operators(cfg, spin_text);
    } else if (metric->parsed()) {
      cmd_metric(cfg, spin_text, proj_text, theta);
    } else if (evolve_cmd->parsed()) {
      cmd_evolve(cfg, spin_text, proj_text, field_theta, field_phi, omega, total_time,
                 steps);
    } else if (brach->parsed()) {
      cmd_brach(cfg, spin_text, proj_text, theta_f, phi_f, omega, has_field_theta,
                field_theta);
    } else if (sweep->parsed()) {
      cmd_sweep(cfg, spin_text, proj_text, theta_f, omega, grid);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
