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

#include <vector>

#include "mcmrb/clifford.hpp"
#include "mcmrb/density_matrix.hpp"

namespace mcmrb {

enum class OpKind {
  ControlGate,
  AncillaMidMeasure,
  ControlDelay,
  AncillaDelay,
  TerminalMeasureAll,
};

/// One timed operation on a control-ancilla pair. Durations are microseconds.
struct CircuitOp {
  OpKind kind = OpKind::TerminalMeasureAll;
  double duration_us = 0.0;
  CliffordElement gate;  // meaningful only for ControlGate

  static CircuitOp control_gate(CliffordElement g, double t_g);
  static CircuitOp ancilla_mid_measure(double t_m);
  static CircuitOp control_delay(double duration);
  static CircuitOp ancilla_delay(double duration);
  static CircuitOp terminal_measure();
};

struct Circuit {
  std::vector<CircuitOp> ops;
  InitState control_init = InitState::Ground;
  InitState ancilla_init = InitState::Ground;
};

/// True when durations are positive (terminal measure excepted) and the last
/// op is the circuit's single TerminalMeasureAll.
bool is_well_formed(const Circuit& circuit);

/// Total wall-clock duration; an adjacent control/ancilla delay pair of equal
/// duration runs in parallel and counts once.
double scheduled_duration(const Circuit& circuit);

int count_ops(const Circuit& circuit, OpKind kind);

}  // namespace mcmrb
