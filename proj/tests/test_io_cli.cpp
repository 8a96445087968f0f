// Copyright 2026 The mcmrb authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include <random>

#include "mcmrb/channel_metrics.hpp"
#include "mcmrb/cli.hpp"
#include "mcmrb/io.hpp"

using namespace mcmrb;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mcmrb_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

SuiteData small_suite() {
  SuiteConfig config;
  config.lengths = {1, 2, 4, 8, 16};
  config.num_sequences = 6;
  config.seed = 31337;
  ScenarioParams params;
  params.eta = 0.05;
  return run_suite(config, build_noise_model(Scenario::NonQnd, params), 2);
}

constexpr const char* kSmallConfig = R"(# quick non-QND run
[suite]
lengths = 1, 2, 4, 8, 16
num_sequences = 6
shots = 0
t_g = 35ns
t_m = 0.71us
seed = 31337

[noise]
scenario = non_qnd
eta = 0.05
)";

}  // namespace

TEST_CASE("curves survive a csv round trip bit-exactly") {
  const SuiteData data = small_suite();
  std::ostringstream os;
  write_curves_csv(os, data);
  std::istringstream is(os.str());
  const SuiteData back = read_curves_csv(is);
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 2; ++q) {
      REQUIRE(back.curves[p][q].lengths == data.curves[p][q].lengths);
      REQUIRE(back.curves[p][q].samples == data.curves[p][q].samples);
      REQUIRE(back.curves[p][q].mean == data.curves[p][q].mean);
      REQUIRE(back.curves[p][q].stddev == data.curves[p][q].stddev);
    }
  }
}

TEST_CASE("csv reader reports located diagnostics") {
  const auto expect_error = [](const std::string& text, int line) {
    std::istringstream is(text);
    try {
      read_curves_csv(is);
      FAIL("expected DataFormatError");
    } catch (const DataFormatError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("wrong,header\n", 1);
  expect_error("protocol,qubit,length,seq_index,probability\nmcm-rb,control,1,0,1.5\n", 2);
  expect_error("protocol,qubit,length,seq_index,probability\nwat,control,1,0,0.5\n", 2);
  expect_error("protocol,qubit,length,seq_index,probability\nmcm-rb,control,1,0\n", 2);

  std::istringstream empty("protocol,qubit,length,seq_index,probability\n");
  CHECK_THROWS_AS(read_curves_csv(empty), DataFormatError);
}

TEST_CASE("config parser handles units, sections, and diagnostics") {
  const RunConfig config = parse_run_config_text(kSmallConfig);
  CHECK(config.scenario == Scenario::NonQnd);
  CHECK(config.params.eta == doctest::Approx(0.05));
  CHECK(config.suite.t_g == doctest::Approx(0.035));
  CHECK(config.suite.t_m == doctest::Approx(0.71));
  CHECK(config.suite.seed == 31337);
  CHECK(config.suite.lengths == std::vector<int>{1, 2, 4, 8, 16});

  // Angular frequencies carry the 2*pi convention.
  const RunConfig zz = parse_run_config_text(R"([suite]
lengths = 1,2,4,8
[noise]
scenario = zz_relaxation
nu = 50kHz
ancilla_t1 = 10us
)");
  CHECK(zz.params.nu == doctest::Approx(2.0 * 3.14159265358979 * 0.05).epsilon(1e-9));
  CHECK(zz.params.ancilla_t1 == doctest::Approx(10.0));

  const auto expect_line = [](const std::string& text, int line) {
    try {
      parse_run_config_text(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("[suite]\nt_m = 0.71\n", 2);          // bare number for a duration
  expect_line("[noise]\nphi = 0.3\n", 2);           // bare number for an angle
  expect_line("[noise]\nnu = 50\n", 2);             // bare number for a frequency
  expect_line("[nonsense]\n", 1);
  expect_line("[suite]\nlengths 1,2\n", 2);
  expect_line("[suite]\nwidgets = 7\n", 2);

  CHECK(parse_run_config_text("[noise]\nphi = 0.03pi\n").params.phi ==
        doctest::Approx(0.03 * 3.14159265358979).epsilon(1e-12));
  CHECK(parse_run_config_text("[noise]\ndelta = 2.5rad/us\n").params.delta ==
        doctest::Approx(2.5));
}

TEST_CASE("sweep sections parse into converted value grids") {
  const RunConfig config = parse_run_config_text(R"([suite]
lengths = 1,2,4,8
[noise]
scenario = stark
[sweep]
parameter = phi
values = 0.01pi, 0.02pi, 0.05pi
)");
  REQUIRE(config.sweep.has_value());
  CHECK(config.sweep->parameter == "phi");
  REQUIRE(config.sweep->values.size() == 3);
  CHECK(config.sweep->values[1] == doctest::Approx(0.02 * 3.14159265358979).epsilon(1e-12));

  CHECK_THROWS_AS(parse_run_config_text("[sweep]\nparameter = phi\n"), ConfigError);
  CHECK_THROWS_AS(parse_run_config_text("[sweep]\nparameter = quux\nvalues = 1\n"), ConfigError);
}

TEST_CASE("simulate then analyze reproduces identical fits") {
  TempDir tmp;
  const fs::path config_path = tmp.path / "run.cfg";
  write_text(config_path, kSmallConfig);

  SimulateArgs sim;
  sim.config = config_path;
  sim.out_dir = tmp.path / "simulate";
  REQUIRE(cmd_simulate(sim) == kExitOk);
  REQUIRE(fs::exists(sim.out_dir / "curves.csv"));
  REQUIRE(fs::exists(sim.out_dir / "fits.json"));
  REQUIRE(fs::exists(sim.out_dir / "suite_result.json"));
  REQUIRE(fs::exists(sim.out_dir / "classification.txt"));

  AnalyzeArgs analyze;
  analyze.data = sim.out_dir / "curves.csv";
  analyze.out_dir = tmp.path / "analyze";
  REQUIRE(cmd_analyze(analyze) == kExitOk);

  // Bit-exact in exact mode: the serialized fits agree byte for byte.
  CHECK(slurp(sim.out_dir / "fits.json") == slurp(analyze.out_dir / "fits.json"));

  const std::string report = slurp(sim.out_dir / "classification.txt");
  CHECK(report.find("NonQndMeasurement") != std::string::npos);
}

TEST_CASE("json curve exports ingest identically") {
  TempDir tmp;
  const SuiteData data = small_suite();
  write_curves_json(tmp.path / "curves.json", data);
  const SuiteData back = read_curves_json(tmp.path / "curves.json");
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 2; ++q) {
      REQUIRE(back.curves[p][q].samples == data.curves[p][q].samples);
    }
  }
}

TEST_CASE("cli error paths map to the documented exit codes") {
  TempDir tmp;

  SimulateArgs sim;
  sim.config = tmp.path / "missing.cfg";
  CHECK(cmd_simulate(sim) == kExitConfigError);

  write_text(tmp.path / "bad.cfg", "[noise]\nscenario = bogus\n");
  sim.config = tmp.path / "bad.cfg";
  CHECK(cmd_simulate(sim) == kExitConfigError);

  AnalyzeArgs analyze;
  analyze.data = tmp.path / "empty.csv";
  write_text(analyze.data, "");
  analyze.out_dir = tmp.path / "out";
  CHECK(cmd_analyze(analyze) == kExitDataError);

  write_text(tmp.path / "sweepless.cfg", kSmallConfig);
  SimulateArgs sweep;
  sweep.config = tmp.path / "sweepless.cfg";
  sweep.out_dir = tmp.path / "sweep";
  CHECK(cmd_sweep(sweep) == kExitConfigError);

  ReportArgs report;
  report.suite_result = tmp.path / "nope.json";
  CHECK(cmd_report(report) == kExitDataError);
}

TEST_CASE("sweep writes per-point results and a summary table") {
  TempDir tmp;
  write_text(tmp.path / "sweep.cfg", R"([suite]
lengths = 1, 2, 4, 8, 16
num_sequences = 6
seed = 7311

[noise]
scenario = cross_measurement

[sweep]
parameter = p_m
values = 0.01, 0.05
)");
  SimulateArgs args;
  args.config = tmp.path / "sweep.cfg";
  args.out_dir = tmp.path / "sweep_out";
  args.threads = 2;
  REQUIRE(cmd_sweep(args) == kExitOk);
  CHECK(fs::exists(args.out_dir / "suite_result_0.json"));
  CHECK(fs::exists(args.out_dir / "suite_result_1.json"));

  std::ifstream summary(args.out_dir / "summary.csv");
  std::string header;
  std::getline(summary, header);
  CHECK(header.find("analytic_infidelity") != std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(summary, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("metrics with a sweep emits the infidelity table") {
  TempDir tmp;
  write_text(tmp.path / "col.cfg", R"([suite]
lengths = 1, 2, 4, 8
[noise]
scenario = collision
coupling = 0.46MHz
[sweep]
parameter = delta
values = 0.92MHz, 9.2MHz
)");
  MetricsArgs metrics;
  metrics.config = tmp.path / "col.cfg";
  metrics.out_dir = tmp.path / "metrics";
  REQUIRE(cmd_metrics(metrics) == kExitOk);
  REQUIRE(fs::exists(metrics.out_dir / "infidelity_table.csv"));
  std::ifstream table(metrics.out_dir / "infidelity_table.csv");
  std::string line;
  std::getline(table, line);
  CHECK(line == "parameter,value,control_channel_infidelity");
  std::getline(table, line);
  // Near resonance the control channel error is large.
  CHECK(line.find("delta,") == 0);
}

TEST_CASE("metrics writes channel ground truth for a stark scenario") {
  TempDir tmp;
  write_text(tmp.path / "stark.cfg", R"([suite]
lengths = 1,2,4,8
[noise]
scenario = stark
phi = 0.05rad
)");
  MetricsArgs metrics;
  metrics.config = tmp.path / "stark.cfg";
  metrics.out_dir = tmp.path / "metrics";
  REQUIRE(cmd_metrics(metrics) == kExitOk);
  CHECK(fs::exists(metrics.out_dir / "error_choi.csv"));
  CHECK(fs::exists(metrics.out_dir / "error_ptm.csv"));
  CHECK(fs::exists(metrics.out_dir / "measurement_ptm.csv"));
  CHECK(fs::exists(metrics.out_dir / "measurement_ptm_thresholded.csv"));

  nlohmann::json j;
  std::ifstream is(metrics.out_dir / "metrics.json");
  is >> j;
  CHECK(j.at("scenario") == "stark");
  CHECK(j.at("analytic_infidelity").get<double>() ==
        doctest::Approx(infidelity_stark(0.05)).epsilon(1e-12));
}

TEST_CASE("report renders a stored suite result") {
  TempDir tmp;
  const SuiteData data = small_suite();
  const SuiteResult result = analyze_suite(data);
  const Classification cls = classify_signature(result);
  write_json(tmp.path / "suite_result.json", suite_result_to_json(result, cls));

  ReportArgs report;
  report.suite_result = tmp.path / "suite_result.json";
  report.out = tmp.path / "report.txt";
  REQUIRE(cmd_report(report) == kExitOk);
  const std::string text = slurp(tmp.path / "report.txt");
  CHECK(text.find("mcm-rb") != std::string::npos);
  CHECK(text.find("NonQndMeasurement") != std::string::npos);
}
