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

#include "mcmrb/protocols.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mcmrb {
namespace {

// Stream tags keep Clifford sampling and shot sampling independent.
constexpr std::uint64_t kCliffordStream = 1;
constexpr std::uint64_t kShotStream = 2;

void run_tasks(int task_count, int threads, const std::function<void(int)>& task) {
  if (threads <= 1 || task_count <= 1) {
    for (int i = 0; i < task_count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  const int workers = std::min(threads, task_count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < task_count; i = next.fetch_add(1)) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<CliffordElement> draw_sequence(int n, std::mt19937_64& rng) {
  std::vector<CliffordElement> seq;
  seq.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq.push_back(random_clifford(rng));
  return seq;
}

Circuit rb_style_circuit(int n, double t_g, double t_m, std::mt19937_64& rng, bool with_measure,
                         InitState ancilla_init, InitState control_init) {
  if (n < 0) throw std::invalid_argument("sequence length must be non-negative");
  const std::vector<CliffordElement> seq = draw_sequence(n, rng);
  Circuit circuit;
  circuit.ancilla_init = ancilla_init;
  circuit.control_init = control_init;
  circuit.ops.reserve(static_cast<std::size_t>(with_measure ? 2 * n + 2 : 3 * n + 2));
  for (const CliffordElement g : seq) {
    circuit.ops.push_back(CircuitOp::control_gate(g, t_g));
    if (with_measure) {
      circuit.ops.push_back(CircuitOp::ancilla_mid_measure(t_m));
    } else {
      circuit.ops.push_back(CircuitOp::control_delay(t_m));
      circuit.ops.push_back(CircuitOp::ancilla_delay(t_m));
    }
  }
  circuit.ops.push_back(CircuitOp::control_gate(inverse_of_sequence(seq), t_g));
  circuit.ops.push_back(CircuitOp::terminal_measure());
  return circuit;
}

}  // namespace

void validate_config(const SuiteConfig& config) {
  if (config.lengths.empty()) throw std::invalid_argument("suite config: no sequence lengths");
  for (std::size_t i = 0; i < config.lengths.size(); ++i) {
    if (config.lengths[i] < 0 || config.lengths[i] > config.max_length) {
      throw std::invalid_argument("suite config: sequence length out of range");
    }
    if (i > 0 && config.lengths[i] <= config.lengths[i - 1]) {
      throw std::invalid_argument("suite config: lengths must be strictly increasing");
    }
  }
  if (config.num_sequences < 1) throw std::invalid_argument("suite config: num_sequences < 1");
  if (config.shots < 0) throw std::invalid_argument("suite config: negative shots");
  if (config.t_g <= 0 || config.t_m <= 0) {
    throw std::invalid_argument("suite config: durations must be positive");
  }
}

Circuit generate_mcm_rb(int n, double t_g, double t_m, std::mt19937_64& rng,
                        InitState ancilla_init, InitState control_init) {
  return rb_style_circuit(n, t_g, t_m, rng, true, ancilla_init, control_init);
}

Circuit generate_delay_rb(int n, double t_g, double t_m, std::mt19937_64& rng,
                          InitState ancilla_init, InitState control_init) {
  return rb_style_circuit(n, t_g, t_m, rng, false, ancilla_init, control_init);
}

Circuit generate_mcm_rep(int n, double t_g, double t_m, InitState ancilla_init,
                         InitState control_init) {
  if (n < 0) throw std::invalid_argument("sequence length must be non-negative");
  Circuit circuit;
  circuit.ancilla_init = ancilla_init;
  circuit.control_init = control_init;
  circuit.ops.reserve(static_cast<std::size_t>(3 * n + 1));
  for (int i = 0; i < n; ++i) {
    circuit.ops.push_back(CircuitOp::ancilla_mid_measure(t_m));
    circuit.ops.push_back(CircuitOp::control_delay(t_g));
    circuit.ops.push_back(CircuitOp::ancilla_delay(t_g));
  }
  circuit.ops.push_back(CircuitOp::terminal_measure());
  return circuit;
}

SuiteData run_suite(const SuiteConfig& config, const NoiseModel& noise, int threads,
                    const SimOptions& sim) {
  validate_config(config);

  SuiteData data;
  data.config = config;
  data.noise_label = noise.label;

  const auto num_lengths = config.lengths.size();
  for (auto& per_qubit : data.curves) {
    for (auto& curve : per_qubit) {
      curve.lengths = config.lengths;
      curve.samples.assign(num_lengths, {});
    }
  }
  for (int p = 0; p < 2; ++p) {
    for (auto& curve : data.curves[static_cast<std::size_t>(p)]) {
      for (auto& s : curve.samples) {
        s.assign(static_cast<std::size_t>(config.num_sequences), 0.0);
      }
    }
  }
  for (auto& curve : data.curves[2]) {
    for (auto& s : curve.samples) s.assign(1, 0.0);
  }

  const auto record = [&](Protocol protocol, std::size_t length_idx, std::size_t seq_idx,
                          const DensityMatrix& state, std::mt19937_64& shot_rng) {
    for (const Qubit q : {Qubit::Ancilla, Qubit::Control}) {
      const double exact = ground_state_probability(state, q);
      const double estimate = sample_shots(exact, config.shots, shot_rng);
      data.curves[static_cast<std::size_t>(protocol)][static_cast<std::size_t>(q)]
          .samples[length_idx][seq_idx] = estimate;
    }
  };

  // One task per (length, sequence) for the randomized protocols, plus one
  // per length for the deterministic mcm-rep.
  const int seq_tasks = static_cast<int>(num_lengths) * config.num_sequences;
  const int task_count = seq_tasks + static_cast<int>(num_lengths);
  run_tasks(task_count, threads, [&](int task) {
    if (task < seq_tasks) {
      const auto length_idx = static_cast<std::size_t>(task) /
                              static_cast<std::size_t>(config.num_sequences);
      const auto seq_idx = static_cast<std::size_t>(task) %
                           static_cast<std::size_t>(config.num_sequences);
      const int n = config.lengths[length_idx];
      for (const Protocol protocol : {Protocol::McmRb, Protocol::DelayRb}) {
        // The Clifford stream is protocol-independent, pairing the sequences.
        auto gate_rng =
            make_rng(mix_seed(config.seed, kCliffordStream, static_cast<std::uint64_t>(n),
                              seq_idx));
        const Circuit circuit =
            protocol == Protocol::McmRb
                ? generate_mcm_rb(n, config.t_g, config.t_m, gate_rng, config.ancilla_init,
                                  config.control_init)
                : generate_delay_rb(n, config.t_g, config.t_m, gate_rng, config.ancilla_init,
                                    config.control_init);
        auto shot_rng = make_rng(
            mix_seed(config.seed, kShotStream + static_cast<std::uint64_t>(protocol),
                     static_cast<std::uint64_t>(n), seq_idx));
        record(protocol, length_idx, seq_idx, run_circuit(circuit, noise, sim), shot_rng);
      }
    } else {
      const auto length_idx = static_cast<std::size_t>(task - seq_tasks);
      const int n = config.lengths[length_idx];
      const Circuit circuit = generate_mcm_rep(n, config.t_g, config.t_m, config.ancilla_init,
                                               config.control_init);
      auto shot_rng = make_rng(
          mix_seed(config.seed, kShotStream + static_cast<std::uint64_t>(Protocol::McmRep),
                   static_cast<std::uint64_t>(n), 0));
      record(Protocol::McmRep, length_idx, 0, run_circuit(circuit, noise, sim), shot_rng);
    }
  });

  for (auto& per_qubit : data.curves) {
    for (auto& curve : per_qubit) curve.recompute_stats();
  }
  // mcm-rep has no sequence scatter; report the binomial shot error instead.
  if (config.shots > 0) {
    for (auto& curve : data.curves[2]) {
      for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        const double p = curve.samples[i][0];
        curve.stddev[i] = std::sqrt(p * (1.0 - p) / static_cast<double>(config.shots));
      }
    }
  }
  return data;
}

SuiteResult analyze_suite(const SuiteData& data) {
  SuiteResult result = analyze_curves(data.curves, data.config.shots == 0);
  result.label = data.noise_label;
  return result;
}

}  // namespace mcmrb
