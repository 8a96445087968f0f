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

#include "mcmrb/circuit.hpp"

#include <algorithm>

namespace mcmrb {

CircuitOp CircuitOp::control_gate(CliffordElement g, double t_g) {
  return CircuitOp{OpKind::ControlGate, t_g, g};
}

CircuitOp CircuitOp::ancilla_mid_measure(double t_m) {
  return CircuitOp{OpKind::AncillaMidMeasure, t_m, {}};
}

CircuitOp CircuitOp::control_delay(double duration) {
  return CircuitOp{OpKind::ControlDelay, duration, {}};
}

CircuitOp CircuitOp::ancilla_delay(double duration) {
  return CircuitOp{OpKind::AncillaDelay, duration, {}};
}

CircuitOp CircuitOp::terminal_measure() { return CircuitOp{OpKind::TerminalMeasureAll, 0.0, {}}; }

bool is_well_formed(const Circuit& circuit) {
  if (circuit.ops.empty()) return false;
  if (circuit.ops.back().kind != OpKind::TerminalMeasureAll) return false;
  if (count_ops(circuit, OpKind::TerminalMeasureAll) != 1) return false;
  return std::all_of(circuit.ops.begin(), circuit.ops.end(), [](const CircuitOp& op) {
    return op.kind == OpKind::TerminalMeasureAll || op.duration_us > 0.0;
  });
}

double scheduled_duration(const Circuit& circuit) {
  double total = 0.0;
  const auto& ops = circuit.ops;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const bool is_delay =
        ops[i].kind == OpKind::ControlDelay || ops[i].kind == OpKind::AncillaDelay;
    total += ops[i].duration_us;
    if (is_delay && i + 1 < ops.size() && ops[i + 1].duration_us == ops[i].duration_us) {
      const bool next_is_partner = (ops[i].kind == OpKind::ControlDelay &&
                                    ops[i + 1].kind == OpKind::AncillaDelay) ||
                                   (ops[i].kind == OpKind::AncillaDelay &&
                                    ops[i + 1].kind == OpKind::ControlDelay);
      if (next_is_partner) ++i;  // parallel slice, count once
    }
  }
  return total;
}

int count_ops(const Circuit& circuit, OpKind kind) {
  return static_cast<int>(
      std::count_if(circuit.ops.begin(), circuit.ops.end(),
                    [kind](const CircuitOp& op) { return op.kind == kind; }));
}

}  // namespace mcmrb
