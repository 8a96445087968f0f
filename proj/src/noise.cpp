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

#include "mcmrb/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace mcmrb {
namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

KrausChannel compose_channels(const KrausChannel& first, const KrausChannel& second) {
  KrausChannel out;
  out.ops.reserve(first.ops.size() * second.ops.size());
  for (const auto& b : second.ops) {
    for (const auto& a : first.ops) out.ops.push_back(b * a);
  }
  return out;
}

}  // namespace

KrausChannel depolarizing(double eta) {
  require_probability(eta, "depolarizing probability");
  std::vector<Eigen::MatrixXcd> ops;
  ops.push_back(std::sqrt(1.0 - 0.75 * eta) * pauli(0));
  for (int p = 1; p <= 3; ++p) ops.push_back(std::sqrt(0.25 * eta) * pauli(p));
  return make_kraus_channel(std::move(ops));
}

KrausChannel amplitude_phase_damping(const DampingParams& params) {
  if (params.t1_us <= 0.0 || params.t2_us <= 0.0) {
    throw std::invalid_argument("damping requires positive T1 and T2");
  }
  if (params.t2_us > 2.0 * params.t1_us + 1e-12) {
    throw std::invalid_argument("damping requires T2 <= 2*T1");
  }
  if (params.duration_us < 0.0) {
    throw std::invalid_argument("damping duration must be non-negative");
  }
  const double t = params.duration_us;
  const double relax = 1.0 - std::exp(-t / params.t1_us);      // |1> -> |0> probability
  const double coherence = std::exp(-t / params.t2_us);        // off-diagonal factor
  // Residual excited weight splits between staying coherent and pure
  // dephasing; T2 <= 2*T1 keeps the dephasing weight non-negative.
  const double dephase = std::max(0.0, (1.0 - relax) - coherence * coherence);

  Eigen::Matrix2cd keep = Eigen::Matrix2cd::Zero();
  keep(0, 0) = 1.0;
  keep(1, 1) = coherence;
  Eigen::Matrix2cd decay = Eigen::Matrix2cd::Zero();
  decay(0, 1) = std::sqrt(relax);
  Eigen::Matrix2cd scramble = Eigen::Matrix2cd::Zero();
  scramble(1, 1) = std::sqrt(dephase);
  return make_kraus_channel({keep, decay, scramble});
}

Eigen::Matrix2cd stark_unitary(double phi) {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  u(0, 0) = std::exp(-kImag * phi);
  u(1, 1) = std::exp(kImag * phi);
  return u;
}

KrausChannel cross_measurement(double p_m) {
  require_probability(p_m, "cross-measurement probability");
  Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
  k0(0, 0) = std::sqrt(p_m);
  Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
  k1(1, 1) = std::sqrt(p_m);
  const Eigen::Matrix2cd k2 = std::sqrt(1.0 - p_m) * Eigen::Matrix2cd::Identity();
  return make_kraus_channel({k0, k1, k2});
}

Eigen::Matrix4cd collision_unitary(double delta, double coupling, double t_m) {
  // Basis |ancilla control>: {|00>, |01>, |10>, |11>}. The exchange term only
  // couples |01> <-> |10|; the detuning adds opposite phases on the ancilla
  // ground/excited sectors.
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(0, 0) = 0.5 * delta;
  h(1, 1) = 0.5 * delta;
  h(2, 2) = -0.5 * delta;
  h(3, 3) = -0.5 * delta;
  h(1, 2) = coupling;
  h(2, 1) = coupling;

  // Hermitian input, so exponentiate through the eigendecomposition.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h);
  const Eigen::Vector4d evals = solver.eigenvalues();
  Eigen::Vector4cd phases;
  for (int i = 0; i < 4; ++i) phases(i) = std::exp(-kImag * evals(i) * t_m);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::Matrix4cd zz_unitary(double nu, double t_m) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  u(2, 2) = std::exp(-kImag * nu * t_m);
  u(3, 3) = std::exp(kImag * nu * t_m);
  return u;
}

NoiseModel build_noise_model(Scenario scenario, const ScenarioParams& params) {
  NoiseModel model;
  model.gate_depol_eta = params.gate_depol_eta;
  model.label = to_string(scenario);
  if (scenario == Scenario::None) return model;

  const DampingParams control_damping{params.control_t1, params.control_t2, params.t_m};
  const KrausChannel control_t1t2 =
      embed_on(amplitude_phase_damping(control_damping), Qubit::Control);
  model.control_delay_damping = DelayDamping{params.control_t1, params.control_t2};

  switch (scenario) {
    case Scenario::NonQnd:
      model.pre_measure = control_t1t2;
      model.post_measure = embed_on(depolarizing(params.eta), Qubit::Ancilla);
      break;
    case Scenario::Stark:
      model.pre_measure =
          KrausChannel::from_unitary(embed_on(stark_unitary(params.phi), Qubit::Control));
      model.post_measure = control_t1t2;
      break;
    case Scenario::CrossMeasurement:
      model.pre_measure = embed_on(cross_measurement(params.p_m), Qubit::Control);
      model.post_measure = control_t1t2;
      break;
    case Scenario::Collision:
      model.pre_measure = KrausChannel::from_unitary(
          collision_unitary(params.delta, params.coupling, params.t_m));
      model.post_measure = control_t1t2;
      break;
    case Scenario::ZzRelaxation: {
      model.pre_measure = KrausChannel::from_unitary(zz_unitary(params.nu, params.t_m));
      const DampingParams ancilla_damping{params.ancilla_t1, params.ancilla_t1 / 3.0, params.t_m};
      model.post_measure = compose_channels(
          control_t1t2, embed_on(amplitude_phase_damping(ancilla_damping), Qubit::Ancilla));
      break;
    }
    case Scenario::None:
      break;
  }
  return model;
}

std::string to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::None:
      return "none";
    case Scenario::NonQnd:
      return "non_qnd";
    case Scenario::Stark:
      return "stark";
    case Scenario::CrossMeasurement:
      return "cross_measurement";
    case Scenario::Collision:
      return "collision";
    case Scenario::ZzRelaxation:
      return "zz_relaxation";
  }
  return "none";
}

std::optional<Scenario> scenario_from_string(std::string_view name) {
  if (name == "none") return Scenario::None;
  if (name == "non_qnd") return Scenario::NonQnd;
  if (name == "stark") return Scenario::Stark;
  if (name == "cross_measurement") return Scenario::CrossMeasurement;
  if (name == "collision") return Scenario::Collision;
  if (name == "zz_relaxation") return Scenario::ZzRelaxation;
  return std::nullopt;
}

}  // namespace mcmrb
