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

#include "mcmrb/simulator.hpp"

#include <stdexcept>

namespace mcmrb {
namespace {

KrausChannel delay_channel(const DelayDamping& damping, double duration, Qubit wire) {
  return embed_on(amplitude_phase_damping({damping.t1_us, damping.t2_us, duration}), wire);
}

}  // namespace

DensityMatrix run_circuit(const Circuit& circuit, const NoiseModel& noise,
                          const SimOptions& options) {
  if (!is_well_formed(circuit)) {
    throw std::invalid_argument("run_circuit: malformed circuit");
  }

  const bool has_gate_depol = noise.gate_depol_eta > 0.0;
  const KrausChannel gate_depol =
      has_gate_depol ? embed_on(depolarizing(noise.gate_depol_eta), Qubit::Control)
                     : KrausChannel::identity(4);

  DensityMatrix state = DensityMatrix::two_qubit(circuit.ancilla_init, circuit.control_init);
  const auto check = [&](const DensityMatrix& dm) {
    if (options.validate) validate_density(dm, options.validate_tol);
  };
  check(state);

  for (const CircuitOp& op : circuit.ops) {
    switch (op.kind) {
      case OpKind::ControlGate:
        state = apply_unitary(state, op.gate.unitary(), Qubit::Control);
        check(state);
        if (has_gate_depol) {
          state = apply_kraus(state, gate_depol);
          check(state);
        }
        break;
      case OpKind::AncillaMidMeasure:
        state = apply_kraus(state, noise.pre_measure);
        check(state);
        state = mid_measure_ancilla(state);
        check(state);
        state = apply_kraus(state, noise.post_measure);
        check(state);
        break;
      case OpKind::ControlDelay:
        if (noise.control_delay_damping) {
          state = apply_kraus(
              state, delay_channel(*noise.control_delay_damping, op.duration_us, Qubit::Control));
          check(state);
        }
        break;
      case OpKind::AncillaDelay:
        if (noise.ancilla_delay_damping) {
          state = apply_kraus(
              state, delay_channel(*noise.ancilla_delay_damping, op.duration_us, Qubit::Ancilla));
          check(state);
        }
        break;
      case OpKind::TerminalMeasureAll:
        break;
    }
  }
  return state;
}

double sample_shots(double p, int shots, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("sample_shots: probability out of range");
  }
  if (shots < 0) throw std::invalid_argument("sample_shots: negative shot count");
  if (shots == 0) return p;
  std::binomial_distribution<int> dist(shots, p);
  return static_cast<double>(dist(rng)) / static_cast<double>(shots);
}

}  // namespace mcmrb
