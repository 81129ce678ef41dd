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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"
#include "spinbrach/brachistochrone.hpp"

using json = nlohmann::json;
using spinbrach::testing::CliResult;
using spinbrach::testing::run_cli;

namespace {

constexpr double kPi = std::numbers::pi;

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream lines(text);
  std::string line;
  bool first = true;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    if (first) {
      while (std::getline(cells, cell, ',')) csv.header.push_back(cell);
      first = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

int column(const Csv& csv, const std::string& name) {
  for (std::size_t i = 0; i < csv.header.size(); ++i) {
    if (csv.header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TEST_CASE("operators command prints the exact spin-1 matrices") {
  const CliResult result = run_cli("operators --s 1");
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.out);

  CHECK(out["dim"] == 3);
  // complex entries are [re, im] pairs
  CHECK(out["sz"][0][0][0].get<double>() == 1.0);
  CHECK(out["sz"][0][0][1].get<double>() == 0.0);
  CHECK(out["sz"][1][1][0].get<double>() == 0.0);
  CHECK(out["sz"][2][2][0].get<double>() == -1.0);
  CHECK(out["sx"][0][1][0].get<double>() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-11));
  CHECK(out["sy"][1][0][1].get<double>() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-11));
}

TEST_CASE("operators command accepts fractions and half Paulis come out") {
  for (const std::string spin : {"0.5", "1/2"}) {
    const CliResult result = run_cli("operators --s " + spin);
    REQUIRE(result.exit_code == 0);
    const json out = json::parse(result.out);
    CHECK(out["dim"] == 2);
    CHECK(out["sx"][0][1][0].get<double>() == 0.5);
    CHECK(out["sy"][0][1][1].get<double>() == -0.5);
    CHECK(out["sz"][0][0][0].get<double>() == 0.5);
  }
}

TEST_CASE("operators command rejects invalid spins with exit 2") {
  CHECK(run_cli("operators --s=-1").exit_code == 2);
  CHECK(run_cli("operators --s 0.3").exit_code == 2);
  CHECK(run_cli("operators").exit_code == 2);
}

TEST_CASE("metric command reports tensor, closed form, deviation and radius") {
  const CliResult result = run_cli("metric --s 1 --m 0 --theta 1.0");
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.out);
  CHECK(out["g_tt"].get<double>() == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(out["g_pp"].get<double>() ==
        doctest::Approx(std::sin(1.0) * std::sin(1.0)).epsilon(1e-11));
  CHECK(std::abs(out["g_tp"].get<double>()) < 1e-10);
  CHECK(out["closed_form"]["g_tt"].get<double>() == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(out["max_abs_dev"].get<double>() < 1e-8);
  CHECK(out["radius"].get<double>() == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("metric command half-integer radius") {
  const CliResult result = run_cli("metric --s 1.5 --m 0.5");
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.out);
  CHECK(out["radius"].get<double>() == doctest::Approx(1.3228756555).epsilon(1e-9));
}

TEST_CASE("metric command scales with gamma") {
  const CliResult result = run_cli("--gamma 2 metric --s 0.5 --m 0.5 --theta 0.7");
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.out);
  CHECK(out["g_tt"].get<double>() == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(out["radius"].get<double>() == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("metric command rejects invalid projections with exit 2") {
  CHECK(run_cli("metric --s 1 --m 2").exit_code == 2);
  CHECK(run_cli("metric --s 1 --m 0.5").exit_code == 2);
}

TEST_CASE("evolve trace ends on the manifold at the predicted angles") {
  const CliResult result = run_cli(
      "evolve --s 1 --m 1 --field-theta 1.5707963268 --omega 1 "
      "--t 3.1415926536 --steps 10");
  REQUIRE(result.exit_code == 0);
  const Csv csv = parse_csv(result.out);
  REQUIRE(csv.rows.size() == 10);
  REQUIRE(csv.header.size() == 11);  // t, 3 complex amplitudes, 4 trailing columns

  const int fid = column(csv, "residency_fidelity");
  const int th = column(csv, "predicted_theta");
  REQUIRE(fid >= 0);
  REQUIRE(th >= 0);
  for (const auto& row : csv.rows) {
    CHECK(row[fid] >= 1.0 - 1e-8);
  }
  CHECK(csv.rows.back()[th] == doctest::Approx(kPi).epsilon(1e-8));
  CHECK(csv.rows.back()[0] == doctest::Approx(3.1415926536).epsilon(1e-11));
}

TEST_CASE("evolve trace at t = 0 prints the initial basis state") {
  const CliResult result =
      run_cli("evolve --s 1 --m 1 --field-theta 0.9 --omega 1 --t 0 --steps 1");
  REQUIRE(result.exit_code == 0);
  const Csv csv = parse_csv(result.out);
  REQUIRE(csv.rows.size() == 1);
  const auto& row = csv.rows.front();
  CHECK(row[0] == 0.0);         // t
  CHECK(row[1] == 1.0);         // re0
  CHECK(row[2] == 0.0);         // im0
  CHECK(row[3] == 0.0);         // re1
  CHECK(row[5] == 0.0);         // re2
  const int fid = column(csv, "residency_fidelity");
  CHECK(row[fid] == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("evolve supports json rows") {
  const CliResult result = run_cli(
      "--format json evolve --s 0.5 --m 0.5 --field-theta 1.0 --omega 2 --t 1.5 "
      "--steps 4");
  REQUIRE(result.exit_code == 0);
  const json rows = json::parse(result.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row["residency_fidelity"].get<double>() >= 1.0 - 1e-8);
    CHECK(row["amplitudes"].size() == 2);
  }
}

TEST_CASE("brach command minimal times") {
  const CliResult antipodal = run_cli("brach --s 1 --m 1 --theta-f 3.1415926536 --omega 1");
  REQUIRE(antipodal.exit_code == 0);
  const json a = json::parse(antipodal.out);
  CHECK(a["time"].get<double>() == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(a["field"]["theta"].get<double>() == doctest::Approx(kPi / 2.0).epsilon(1e-10));

  const CliResult orthogonal = run_cli("brach --s 1 --m 0 --theta-f 1.5707963268 --omega 1");
  REQUIRE(orthogonal.exit_code == 0);
  const json o = json::parse(orthogonal.out);
  CHECK(o["time"].get<double>() == doctest::Approx(kPi / 2.0).epsilon(1e-10));
  CHECK(o["speed"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(o["path_length"].get<double>() == doctest::Approx(kPi / 2.0).epsilon(1e-10));
}

TEST_CASE("brach command with a held tilt") {
  const CliResult result = run_cli(
      "brach --s 1 --m 1 --theta-f 1.5707963268 --omega 1 --field-theta 1.0471975512");
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.out);
  // transfer_time(1, pi/3, pi/2), frozen pre-build
  CHECK(out["time"].get<double>() == doctest::Approx(1.9106332362).epsilon(1e-9));
  CHECK(out["field"]["theta"].get<double>() == doctest::Approx(kPi / 3.0).epsilon(1e-9));
}

TEST_CASE("brach reports unreachable targets with exit 3") {
  const CliResult result =
      run_cli("brach --s 1 --m 1 --theta-f 3.0 --omega 1 --field-theta 0.1");
  CHECK(result.exit_code == 3);
  CHECK(result.err.find("target outside rotation circle") != std::string::npos);
}

TEST_CASE("sweep command emits a monotone time column ending at the optimum") {
  const CliResult result = run_cli("sweep --s 1 --m 1 --theta-f 1.5707963268 --omega 1 --grid 101");
  REQUIRE(result.exit_code == 0);
  const Csv csv = parse_csv(result.out);
  REQUIRE(csv.rows.size() == 101);
  REQUIRE(csv.header == std::vector<std::string>{"theta_prime", "time", "speed",
                                                 "path_length"});
  for (std::size_t i = 1; i < csv.rows.size(); ++i) {
    CHECK(csv.rows[i][1] < csv.rows[i - 1][1]);
  }
  CHECK(csv.rows.back()[0] == doctest::Approx(kPi / 2.0).epsilon(1e-10));
  CHECK(csv.rows.back()[1] == doctest::Approx(1.5707963268).epsilon(1e-10));

  // each printed row re-computes through the library
  for (const auto& row : csv.rows) {
    const double expected = spinbrach::transfer_time(1.0, row[0], 1.5707963268);
    CHECK(row[1] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("sweep of theta_f = 0 is all-zero time") {
  const CliResult result = run_cli("sweep --s 1 --m 1 --theta-f 0 --omega 1 --grid 11");
  REQUIRE(result.exit_code == 0);
  const Csv csv = parse_csv(result.out);
  REQUIRE(csv.rows.size() == 11);
  for (const auto& row : csv.rows) CHECK(row[1] == 0.0);
}

TEST_CASE("sweep validates the grid with exit 2") {
  CHECK(run_cli("sweep --s 1 --m 1 --theta-f 1.0 --grid 2").exit_code == 2);
}

TEST_CASE("degrees flag converts input angles") {
  const CliResult result = run_cli("--degrees brach --s 1 --m 1 --theta-f 180 --omega 1");
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.out);
  CHECK(out["time"].get<double>() == doctest::Approx(kPi).epsilon(1e-10));
}

TEST_CASE("precision is validated and applied") {
  CHECK(run_cli("--precision 3 operators --s 1").exit_code == 2);
  CHECK(run_cli("--precision 18 operators --s 1").exit_code == 2);

  const CliResult coarse = run_cli("--precision 4 brach --s 1 --m 1 --theta-f 3.1415926536 --omega 1");
  REQUIRE(coarse.exit_code == 0);
  const json out = json::parse(coarse.out);
  CHECK(out["time"].get<double>() == doctest::Approx(3.142).epsilon(1e-12));
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string args = "brach --s 1.5 --m 0.5 --theta-f 2.2 --phi-f 0.4 --omega 1.7";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  const std::string sweep_args = "sweep --s 2 --m 1 --theta-f 1.1 --omega 0.9 --grid 31";
  CHECK(run_cli(sweep_args).out == run_cli(sweep_args).out);
}

TEST_CASE("json output re-parses to the in-memory values at the precision") {
  const CliResult result = run_cli("--precision 12 metric --s 1 --m 1 --theta 0.7");
  REQUIRE(result.exit_code == 0);
  const json out = json::parse(result.out);
  CHECK(std::abs(out["g_tt"].get<double>() - 0.5) < 1e-11);
  CHECK(std::abs(out["radius"].get<double>() - 1.0 / std::sqrt(2.0)) < 1e-11);
  CHECK(std::abs(out["g_pp"].get<double>() - 0.5 * std::sin(0.7) * std::sin(0.7)) < 1e-11);
}

TEST_CASE("output lands in a file when requested") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "spinbrach_cli_out.json";
  std::filesystem::remove(path);
  const std::string args = "brach --s 1 --m 1 --theta-f 2.0 --omega 1";
  const CliResult to_stdout = run_cli(args);
  const CliResult to_file = run_cli(args + " --output " + path.string());
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());

  std::ifstream file(path);
  std::ostringstream content;
  content << file.rdbuf();
  CHECK(content.str() == to_stdout.out);
  std::filesystem::remove(path);
}

TEST_CASE("metric csv output carries the same eight columns") {
  const CliResult result = run_cli("--format csv metric --s 1 --m 0 --theta 1.0");
  REQUIRE(result.exit_code == 0);
  const Csv csv = parse_csv(result.out);
  REQUIRE(csv.rows.size() == 1);
  REQUIRE(csv.header.size() == 8);
  CHECK(csv.rows[0][column(csv, "g_tt")] == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(csv.rows[0][column(csv, "radius")] == doctest::Approx(1.0).epsilon(1e-11));
}
