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

#include <optional>
#include <string>
#include <string_view>

#include "mcmrb/density_matrix.hpp"

namespace mcmrb {

/// Relaxation/dephasing parameters, all in microseconds. Requires T1 > 0 and
/// 0 < T2 <= 2*T1.
struct DampingParams {
  double t1_us = 0.0;
  double t2_us = 0.0;
  double duration_us = 0.0;
};

/// rho -> (1-eta) rho + eta I/2.
KrausChannel depolarizing(double eta);

/// Combined amplitude and phase damping for duration t: excited population
/// decays by exp(-t/T1), coherences by exp(-t/T2); fixed point is the ground
/// state. The pure-dephasing share follows 1/T_phi = 1/T2 - 1/(2 T1).
KrausChannel amplitude_phase_damping(const DampingParams& params);

/// Z-phase error diag(e^{-i phi}, e^{i phi}).
Eigen::Matrix2cd stark_unitary(double phi);

/// Dephases the qubit completely with probability p_m, identity otherwise.
KrausChannel cross_measurement(double p_m);

/// exp(-i H t_m) for H = (delta/2) Z_a + coupling (S-_a S+_c + S+_a S-_c).
/// delta and coupling are angular frequencies in rad/us.
Eigen::Matrix4cd collision_unitary(double delta, double coupling, double t_m);

/// exp(-i H t_m) for H = nu |e><e|_a x Z_c: a control Z rotation conditioned
/// on the ancilla being excited. nu in rad/us.
Eigen::Matrix4cd zz_unitary(double nu, double t_m);

struct DelayDamping {
  double t1_us = 0.0;
  double t2_us = 0.0;
};

/// Noise attached to a suite simulation: a depolarizing error after every
/// control Clifford, a two-qubit channel before and after each ancilla
/// mid-measure, and optional duration-scaled damping during delays.
struct NoiseModel {
  double gate_depol_eta = 1e-3;
  KrausChannel pre_measure = KrausChannel::identity(4);
  KrausChannel post_measure = KrausChannel::identity(4);
  std::optional<DelayDamping> control_delay_damping;
  std::optional<DelayDamping> ancilla_delay_damping;
  std::string label = "none";
};

enum class Scenario { None, NonQnd, Stark, CrossMeasurement, Collision, ZzRelaxation };

struct ScenarioParams {
  double eta = 0.02;          // non-QND depolarizing probability
  double phi = 0.0;           // Stark phase, rad
  double p_m = 0.0;           // cross-measurement probability
  double delta = 0.0;         // collision detuning, rad/us
  double coupling = 0.0;      // collision exchange rate, rad/us
  double nu = 0.0;            // ZZ rate, rad/us
  double t_m = 0.71;          // measurement duration, us
  double control_t1 = 345.0;  // us
  double control_t2 = 280.0;  // us
  double ancilla_t1 = 100.0;  // us; ZZ scenario, with T2 = T1/3
  double gate_depol_eta = 1e-3;
};

/// Assembles the (pre, post) channel pair for a scenario. Every scenario
/// except None also attaches control-delay damping so that delay sequences
/// idle under the same decoherence the measurement windows carry.
NoiseModel build_noise_model(Scenario scenario, const ScenarioParams& params);

std::string to_string(Scenario scenario);
std::optional<Scenario> scenario_from_string(std::string_view name);

}  // namespace mcmrb
