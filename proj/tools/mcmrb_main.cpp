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

#include <CLI11.hpp>

#include "mcmrb/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mcm-rb suite: generate, simulate, fit, and classify mid-circuit-measurement "
               "randomized benchmarking"};
  app.require_subcommand(1);

  mcmrb::SimulateArgs simulate_args;
  std::uint64_t seed_flag = 0;
  int shots_flag = 0;

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", simulate_args.config, "run configuration file")->required();
    cmd->add_option("--out", simulate_args.out_dir, "output directory");
    cmd->add_option("--seed", seed_flag, "override the config seed");
    cmd->add_option("--shots", shots_flag, "override the shot count (0 = exact)");
    cmd->add_option("--threads", simulate_args.threads, "worker threads");
    cmd->add_option("--format", simulate_args.format, "curves file format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* simulate = app.add_subcommand("simulate", "run the three-protocol suite");
  add_run_flags(simulate);
  CLI::App* sweep = app.add_subcommand("sweep", "run the suite over a parameter grid");
  add_run_flags(sweep);

  mcmrb::AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "fit and classify an existing export");
  analyze->add_option("--data", analyze_args.data, "decay-curve export (.csv or .json)")
      ->required();
  analyze->add_option("--out", analyze_args.out_dir, "output directory");

  mcmrb::MetricsArgs metrics_args;
  double eps_irb_flag = 0.0;
  CLI::App* metrics = app.add_subcommand("metrics", "channel-level ground truth for a scenario");
  metrics->add_option("--config", metrics_args.config, "run configuration file")->required();
  metrics->add_option("--out", metrics_args.out_dir, "output directory");
  CLI::Option* eps_opt =
      metrics->add_option("--eps-irb", eps_irb_flag, "threshold estimate for the PTM view");

  mcmrb::ReportArgs report_args;
  std::string report_out;
  CLI::App* report = app.add_subcommand("report", "render a stored suite result");
  report->add_option("--in", report_args.suite_result, "suite_result.json path")->required();
  CLI::Option* report_out_opt = report->add_option("--out", report_out, "write instead of print");

  CLI11_PARSE(app, argc, argv);

  if (simulate->count("--seed") || sweep->count("--seed")) simulate_args.seed = seed_flag;
  if (simulate->count("--shots") || sweep->count("--shots")) simulate_args.shots = shots_flag;

  if (simulate->parsed()) return mcmrb::cmd_simulate(simulate_args);
  if (sweep->parsed()) return mcmrb::cmd_sweep(simulate_args);
  if (analyze->parsed()) return mcmrb::cmd_analyze(analyze_args);
  if (metrics->parsed()) {
    if (eps_opt->count() > 0) metrics_args.eps_irb = eps_irb_flag;
    return mcmrb::cmd_metrics(metrics_args);
  }
  if (report->parsed()) {
    if (report_out_opt->count() > 0) report_args.out = report_out;
    return mcmrb::cmd_report(report_args);
  }
  return mcmrb::kExitConfigError;
}
