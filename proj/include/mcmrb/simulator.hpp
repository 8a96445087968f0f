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

#include <random>

#include "mcmrb/circuit.hpp"
#include "mcmrb/noise.hpp"

namespace mcmrb {

struct SimOptions {
  bool validate = false;      // check density-matrix invariants after every op
  double validate_tol = 1e-9;
};

/// Evolves the two-qubit pair through the circuit: each control gate is
/// followed by the gate-depolarizing channel, each ancilla mid-measure is
/// wrapped as pre-channel -> dephasing -> post-channel, and delays apply the
/// model's duration-scaled damping when configured. Returns the state just
/// before the terminal measurement.
DensityMatrix run_circuit(const Circuit& circuit, const NoiseModel& noise,
                          const SimOptions& options = {});

/// Binomial shot estimate of a probability; shots = 0 means exact readout.
double sample_shots(double p, int shots, std::mt19937_64& rng);

}  // namespace mcmrb
