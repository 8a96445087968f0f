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

#include <cstdint>

#include "mcmrb/analysis.hpp"
#include "mcmrb/circuit.hpp"
#include "mcmrb/rng.hpp"
#include "mcmrb/simulator.hpp"

namespace mcmrb {

struct SuiteConfig {
  std::vector<int> lengths = {1, 2, 4, 6, 8, 12, 16, 24, 32, 48, 64, 90, 110, 130, 150};
  int num_sequences = 60;
  int shots = 0;  // 0 = exact readout
  double t_g = 0.035;  // us
  double t_m = 0.71;   // us
  InitState ancilla_init = InitState::Ground;
  InitState control_init = InitState::Ground;
  std::uint64_t seed = kDefaultSeed;
  int max_length = 100000;
};

/// Throws std::invalid_argument when lengths are not strictly increasing,
/// exceed the cap, or the sequence count is non-positive.
void validate_config(const SuiteConfig& config);

/// N random control Cliffords each followed by an ancilla mid-measure, then
/// the inverting Clifford: N measurements, N+1 gates.
Circuit generate_mcm_rb(int n, double t_g, double t_m, std::mt19937_64& rng,
                        InitState ancilla_init = InitState::Ground,
                        InitState control_init = InitState::Ground);

/// Same gate sequence as generate_mcm_rb for the same rng state, with every
/// mid-measure replaced by a parallel control/ancilla delay of duration t_m.
Circuit generate_delay_rb(int n, double t_g, double t_m, std::mt19937_64& rng,
                          InitState ancilla_init = InitState::Ground,
                          InitState control_init = InitState::Ground);

/// N ancilla measurements, each followed by a parallel delay pair of duration
/// t_g. No gates, hence deterministic.
Circuit generate_mcm_rep(int n, double t_g, double t_m,
                         InitState ancilla_init = InitState::Ground,
                         InitState control_init = InitState::Ground);

/// Decay curves for the whole suite, indexed [protocol][qubit] with
/// Qubit::Ancilla = 0, Qubit::Control = 1.
struct SuiteData {
  SuiteConfig config;
  std::string noise_label;
  std::array<std::array<DecayCurve, 2>, 3> curves;
};

/// Runs every (protocol, length, sequence) combination. Per-task random
/// streams derive from (seed, length, sequence), so mcm-rb and delay-rb see
/// identical Clifford sequences and results do not depend on thread count.
SuiteData run_suite(const SuiteConfig& config, const NoiseModel& noise, int threads = 1,
                    const SimOptions& sim = {});

SuiteResult analyze_suite(const SuiteData& data);

}  // namespace mcmrb
