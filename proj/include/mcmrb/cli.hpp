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

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mcmrb/config.hpp"

namespace mcmrb {

// Stable exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDataError = 3;
inline constexpr int kExitNumericError = 4;

struct SimulateArgs {
  std::filesystem::path config;
  std::filesystem::path out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> shots;
  int threads = 1;
  std::string format = "csv";  // curves file format: csv | json
};

struct AnalyzeArgs {
  std::filesystem::path data;  // decay-curve export (.csv or .json)
  std::filesystem::path out_dir = "out";
};

struct MetricsArgs {
  std::filesystem::path config;
  std::filesystem::path out_dir = "out";
  std::optional<double> eps_irb;  // threshold input; defaults to the analytic infidelity
};

struct ReportArgs {
  std::filesystem::path suite_result;  // suite_result.json from simulate/analyze
  std::optional<std::filesystem::path> out;
};

/// Runs the configured suite and writes curves, fits, the suite result, and a
/// classification report into out_dir.
int cmd_simulate(const SimulateArgs& args);

/// Runs the suite once per sweep value and writes per-point suite results
/// plus a summary table (parameter, estimate, analytic infidelity).
int cmd_sweep(const SimulateArgs& args);

/// Fits and classifies an existing decay-curve export without simulating.
int cmd_analyze(const AnalyzeArgs& args);

/// Writes channel-level ground truth for the configured scenario: Choi
/// matrix, PTMs (plain and thresholded), and infidelities.
int cmd_metrics(const MetricsArgs& args);

/// Renders a stored suite result as a human-readable report.
int cmd_report(const ReportArgs& args);

}  // namespace mcmrb
