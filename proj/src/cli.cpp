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

#include "mcmrb/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>

#include "mcmrb/channel_metrics.hpp"
#include "mcmrb/io.hpp"

namespace mcmrb {
namespace {

void apply_overrides(RunConfig& config, const SimulateArgs& args) {
  if (args.seed) config.suite.seed = *args.seed;
  if (args.shots) config.suite.shots = *args.shots;
}

void write_suite_outputs(const std::filesystem::path& out_dir, const SuiteData& data,
                         const SuiteResult& result, const Classification& cls,
                         const std::string& format) {
  std::filesystem::create_directories(out_dir);
  if (format == "json") {
    write_curves_json(out_dir / "curves.json", data);
  } else {
    write_curves_csv(out_dir / "curves.csv", data);
  }
  write_json(out_dir / "fits.json", fits_to_json(result));
  write_json(out_dir / "suite_result.json", suite_result_to_json(result, cls));
  write_text(out_dir / "classification.txt", classification_report(result, cls));
}

/// The scenario's bare error operation as a two-qubit channel; what the
/// channel-metrics outputs describe.
KrausChannel scenario_error_channel(Scenario scenario, const ScenarioParams& p) {
  switch (scenario) {
    case Scenario::None:
      return KrausChannel::identity(4);
    case Scenario::NonQnd:
      return embed_on(depolarizing(p.eta), Qubit::Ancilla);
    case Scenario::Stark:
      return KrausChannel::from_unitary(embed_on(stark_unitary(p.phi), Qubit::Control));
    case Scenario::CrossMeasurement:
      return embed_on(cross_measurement(p.p_m), Qubit::Control);
    case Scenario::Collision:
      return KrausChannel::from_unitary(collision_unitary(p.delta, p.coupling, p.t_m));
    case Scenario::ZzRelaxation:
      return KrausChannel::from_unitary(zz_unitary(p.nu, p.t_m));
  }
  return KrausChannel::identity(4);
}

std::optional<double> analytic_infidelity(Scenario scenario, const ScenarioParams& p) {
  switch (scenario) {
    case Scenario::None:
      return 0.0;
    case Scenario::NonQnd:
      return 0.5 * p.eta;
    case Scenario::Stark:
      return infidelity_stark(p.phi);
    case Scenario::CrossMeasurement:
      return infidelity_cross_measurement(p.p_m);
    case Scenario::Collision: {
      const ChoiState choi =
          choi_of_unitary(collision_unitary(p.delta, p.coupling, p.t_m));
      return 1.0 - avg_gate_fidelity(effective_control_channel(choi));
    }
    case Scenario::ZzRelaxation:
      return std::nullopt;  // interplay with relaxation has no closed form here
  }
  return std::nullopt;
}

/// Composition dephasing-after-error: the idealized mid-circuit measurement
/// carrying this scenario's error, the object behind the PTM views.
KrausChannel measurement_channel(Scenario scenario, const ScenarioParams& p) {
  Eigen::Matrix4cd p0 = Eigen::Matrix4cd::Zero();
  p0(0, 0) = 1.0;
  p0(1, 1) = 1.0;
  Eigen::Matrix4cd p1 = Eigen::Matrix4cd::Zero();
  p1(2, 2) = 1.0;
  p1(3, 3) = 1.0;
  const KrausChannel error = scenario_error_channel(scenario, p);
  KrausChannel out;
  out.ops.reserve(error.ops.size() * 2);
  for (const auto& proj : {p0, p1}) {
    for (const auto& k : error.ops) out.ops.push_back(proj * k);
  }
  return out;
}

KrausChannel ideal_measurement_channel() {
  return measurement_channel(Scenario::None, ScenarioParams{});
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DataFormatError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  }
}

}  // namespace

int cmd_simulate(const SimulateArgs& args) {
  return run_guarded([&] {
    RunConfig config = parse_run_config(args.config);
    apply_overrides(config, args);
    const NoiseModel noise = build_noise_model(config.scenario, config.params);
    const SuiteData data = run_suite(config.suite, noise, args.threads);
    const SuiteResult result = analyze_suite(data);
    const Classification cls = classify_signature(result);
    write_suite_outputs(args.out_dir, data, result, cls, args.format);
    std::cout << classification_report(result, cls);
    return kExitOk;
  });
}

int cmd_sweep(const SimulateArgs& args) {
  return run_guarded([&] {
    RunConfig config = parse_run_config(args.config);
    apply_overrides(config, args);
    if (!config.sweep) {
      throw ConfigError("sweep requires a [sweep] section", 0);
    }
    std::filesystem::create_directories(args.out_dir);

    std::ofstream summary(args.out_dir / "summary.csv");
    if (!summary) throw std::runtime_error("cannot open summary.csv for writing");
    summary << "scenario,parameter,value,eps_irb,eps_irb_sigma,epm_rb_ancilla,"
               "epm_rb_ancilla_sigma,epm_rep_ancilla,epm_rep_ancilla_sigma,"
               "analytic_infidelity,control_rb_residual_rms,control_rb_scatter\n";

    for (std::size_t i = 0; i < config.sweep->values.size(); ++i) {
      ScenarioParams params = config.params;
      if (!set_scenario_param(params, config.sweep->parameter, config.sweep->values[i])) {
        throw ConfigError("unknown sweep parameter '" + config.sweep->parameter + "'", 0);
      }
      const NoiseModel noise = build_noise_model(config.scenario, params);
      const SuiteData data = run_suite(config.suite, noise, args.threads);
      const SuiteResult result = analyze_suite(data);
      const Classification cls = classify_signature(result);
      write_json(args.out_dir / ("suite_result_" + std::to_string(i) + ".json"),
                 suite_result_to_json(result, cls));

      const auto& rb_control_curve = data.curves[0][1];
      double scatter = 0.0;
      for (const double s : rb_control_curve.stddev) scatter += s;
      scatter /= static_cast<double>(rb_control_curve.stddev.size());

      const auto analytic = analytic_infidelity(config.scenario, params);
      summary << to_string(config.scenario) << ',' << config.sweep->parameter << ','
              << format_double(config.sweep->values[i]) << ','
              << format_double(result.eps_irb.value) << ','
              << format_double(result.eps_irb.sigma) << ','
              << format_double(result.eps[0][0].value) << ','
              << format_double(result.eps[0][0].sigma) << ','
              << format_double(result.eps[2][0].value) << ','
              << format_double(result.eps[2][0].sigma) << ','
              << (analytic ? format_double(*analytic) : "") << ','
              << format_double(result.fits[0][1].residual_rms) << ','
              << format_double(scatter) << "\n";
    }
    std::cout << "sweep complete: " << config.sweep->values.size() << " points\n";
    return kExitOk;
  });
}

int cmd_analyze(const AnalyzeArgs& args) {
  return run_guarded([&] {
    const SuiteData data = args.data.extension() == ".json" ? read_curves_json(args.data)
                                                            : read_curves_csv(args.data);
    const SuiteResult result = analyze_curves(data.curves, true);
    const Classification cls = classify_signature(result);
    std::filesystem::create_directories(args.out_dir);
    write_json(args.out_dir / "fits.json", fits_to_json(result));
    write_json(args.out_dir / "suite_result.json", suite_result_to_json(result, cls));
    write_text(args.out_dir / "classification.txt", classification_report(result, cls));
    std::cout << classification_report(result, cls);
    return kExitOk;
  });
}

int cmd_metrics(const MetricsArgs& args) {
  return run_guarded([&] {
    const RunConfig config = parse_run_config(args.config);
    std::filesystem::create_directories(args.out_dir);

    const KrausChannel error = scenario_error_channel(config.scenario, config.params);
    const ChoiState error_choi = choi_of_channel(error);
    const ChoiState control_choi = effective_control_channel(error_choi);
    const double control_infidelity = 1.0 - avg_gate_fidelity(control_choi);
    const auto analytic = analytic_infidelity(config.scenario, config.params);
    const double eps_irb = args.eps_irb.value_or(analytic.value_or(control_infidelity));

    write_choi_csv(args.out_dir / "error_choi.csv", error_choi);
    write_ptm_csv(args.out_dir / "error_ptm.csv", ptm_of_channel(error));

    const PauliTransferMatrix measurement_ptm =
        ptm_of_channel(measurement_channel(config.scenario, config.params));
    const PauliTransferMatrix ideal_ptm = ptm_of_channel(ideal_measurement_channel());
    write_ptm_csv(args.out_dir / "measurement_ptm.csv", measurement_ptm);
    write_ptm_csv(args.out_dir / "measurement_ptm_thresholded.csv",
                  threshold_ptm(measurement_ptm, eps_irb, ideal_ptm));

    nlohmann::json j;
    j["scenario"] = to_string(config.scenario);
    j["control_channel_infidelity"] = control_infidelity;
    if (analytic) j["analytic_infidelity"] = *analytic;
    j["eps_irb_used"] = eps_irb;
    j["ptm_threshold"] = std::sqrt(6.0 * eps_irb);

    // A sweep turns the metrics into an infidelity table over the parameter.
    if (config.sweep) {
      std::ofstream table(args.out_dir / "infidelity_table.csv");
      if (!table) throw std::runtime_error("cannot open infidelity_table.csv for writing");
      table << "parameter,value,control_channel_infidelity\n";
      for (const double value : config.sweep->values) {
        ScenarioParams params = config.params;
        if (!set_scenario_param(params, config.sweep->parameter, value)) {
          throw ConfigError("unknown sweep parameter '" + config.sweep->parameter + "'", 0);
        }
        const ChoiState choi =
            choi_of_channel(scenario_error_channel(config.scenario, params));
        table << config.sweep->parameter << ',' << format_double(value) << ','
              << format_double(1.0 - avg_gate_fidelity(effective_control_channel(choi)))
              << "\n";
      }
    }

    write_json(args.out_dir / "metrics.json", j);
    std::cout << "control channel infidelity: " << control_infidelity << "\n";
    return kExitOk;
  });
}

int cmd_report(const ReportArgs& args) {
  return run_guarded([&] {
    std::ifstream is(args.suite_result);
    if (!is) throw DataFormatError("cannot open " + args.suite_result.string(), 0);
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DataFormatError(e.what(), 0);
    }

    std::ostringstream os;
    try {
      os << "mcm-rb suite report (" << j.value("label", std::string{"?"}) << ")\n\n";
      os << "EPC/EPM estimates:\n";
      for (const Protocol p : kProtocols) {
        for (const char* q : {"control", "ancilla"}) {
          const auto& eps = j.at("eps").at(to_string(p)).at(q);
          os << "  " << to_string(p) << " / " << q << ": " << eps.at("value").get<double>()
             << " +- " << eps.at("sigma").get<double>() << "\n";
        }
      }
      if (j.contains("eps_irb")) {
        os << "\nmeasurement-induced control error, IRB: "
           << j.at("eps_irb").at("value").get<double>() << " +- "
           << j.at("eps_irb").at("sigma").get<double>() << "\n";
      }
      os << "\nerror signatures:\n";
      const auto& signatures = j.at("classification").at("signatures");
      if (signatures.empty()) os << "  none matched\n";
      for (const auto& verdict : signatures) {
        os << "  " << verdict.at("signature").get<std::string>() << "\n    "
           << verdict.at("evidence").get<std::string>() << "\n";
      }
    } catch (const nlohmann::json::exception& e) {
      throw DataFormatError(e.what(), 0);
    }

    if (args.out) {
      write_text(*args.out, os.str());
    } else {
      std::cout << os.str();
    }
    return kExitOk;
  });
}

}  // namespace mcmrb
