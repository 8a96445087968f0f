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

#include <cmath>

#include <doctest.h>

#include "mcmrb/protocols.hpp"
#include "mcmrb/rng.hpp"

using namespace mcmrb;

namespace {

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  return x;
}

}  // namespace

TEST_CASE("apply_unitary embeds targets and preserves states") {
  const DensityMatrix ground = DensityMatrix::ground(2);

  const DensityMatrix same = apply_unitary(ground, Eigen::Matrix2cd::Identity(), Qubit::Control);
  CHECK((same.rho - ground.rho).norm() == doctest::Approx(0.0));

  const DensityMatrix flipped = apply_unitary(ground, pauli_x(), Qubit::Control);
  CHECK(ground_state_probability(flipped, Qubit::Control) == doctest::Approx(0.0));
  CHECK(ground_state_probability(flipped, Qubit::Ancilla) == doctest::Approx(1.0));

  const DensityMatrix ancilla_flipped = apply_unitary(ground, pauli_x(), Qubit::Ancilla);
  CHECK(ground_state_probability(ancilla_flipped, Qubit::Ancilla) == doctest::Approx(0.0));

  // U then U^dag returns the original state.
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const DensityMatrix round_trip =
      apply_unitary(apply_unitary(ground, h, Qubit::Control), h.adjoint(), Qubit::Control);
  CHECK((round_trip.rho - ground.rho).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(apply_unitary(ground, Eigen::MatrixXcd::Identity(3, 3)),
                  std::invalid_argument);
  Eigen::Matrix2cd not_unitary = Eigen::Matrix2cd::Identity() * 2.0;
  CHECK_THROWS_AS(apply_unitary(ground, not_unitary, Qubit::Control), std::invalid_argument);
}

TEST_CASE("apply_kraus handles the depolarizing limits") {
  const DensityMatrix ground = DensityMatrix::ground(1);

  const DensityMatrix same = apply_kraus(ground, KrausChannel::identity(2));
  CHECK((same.rho - ground.rho).norm() == doctest::Approx(0.0));

  const DensityMatrix mixed = apply_kraus(ground, depolarizing(1.0));
  CHECK(mixed.rho(0, 0).real() == doctest::Approx(0.5));
  CHECK(mixed.rho(1, 1).real() == doctest::Approx(0.5));
  CHECK(std::abs(mixed.rho(0, 1)) < 1e-15);

  // Complete dephasing kills the coherence of |+>.
  Eigen::Vector2cd plus;
  plus << 1, 1;
  plus /= std::sqrt(2.0);
  const DensityMatrix plus_dm{plus * plus.adjoint()};
  const DensityMatrix dephased = apply_kraus(plus_dm, cross_measurement(1.0));
  CHECK(dephased.rho(0, 0).real() == doctest::Approx(0.5));
  CHECK(std::abs(dephased.rho(0, 1)) < 1e-15);

  CHECK_THROWS_AS(make_kraus_channel({Eigen::Matrix2cd::Identity() * 0.5}),
                  std::invalid_argument);
}

TEST_CASE("mid_measure_ancilla dephases exactly the ancilla coherences") {
  // Bell-like state (|00> + |11>)/sqrt(2) becomes the classical mixture.
  Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  const DensityMatrix bell_dm{bell * bell.adjoint()};
  const DensityMatrix measured = mid_measure_ancilla(bell_dm);
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK((measured.rho - expected).cwiseAbs().maxCoeff() < 1e-15);

  // Idempotent, and equal to the explicit Kraus form.
  const DensityMatrix twice = mid_measure_ancilla(measured);
  CHECK((twice.rho - measured.rho).cwiseAbs().maxCoeff() < 1e-14);

  Eigen::Matrix2cd p0 = Eigen::Matrix2cd::Zero();
  p0(0, 0) = 1.0;
  Eigen::Matrix2cd p1 = Eigen::Matrix2cd::Zero();
  p1(1, 1) = 1.0;
  const KrausChannel projectors = make_kraus_channel({p0, p1});
  const DensityMatrix via_kraus = apply_kraus(bell_dm, projectors, Qubit::Ancilla);
  CHECK((via_kraus.rho - measured.rho).cwiseAbs().maxCoeff() < 1e-15);

  const DensityMatrix diagonal{expected};
  const DensityMatrix unchanged = mid_measure_ancilla(diagonal);
  CHECK((unchanged.rho - diagonal.rho).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("noiseless suite circuits return to the ground state") {
  const NoiseModel noiseless{0.0, KrausChannel::identity(4), KrausChannel::identity(4), {}, {}, "ideal"};
  auto rng = make_rng(mix_seed(kDefaultSeed, 21));
  for (const int n : {0, 1, 5, 37, 150}) {
    const Circuit circuit = generate_mcm_rb(n, 0.035, 0.71, rng);
    const DensityMatrix out = run_circuit(circuit, noiseless, SimOptions{true});
    CHECK(ground_state_probability(out, Qubit::Control) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ground_state_probability(out, Qubit::Ancilla) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("single mcm-rep step applies one ancilla depolarizing error") {
  const double eta = 0.04;
  NoiseModel noise;
  noise.gate_depol_eta = 0.0;
  noise.post_measure = embed_on(depolarizing(eta), Qubit::Ancilla);
  const Circuit circuit = generate_mcm_rep(1, 0.035, 0.71);
  const DensityMatrix out = run_circuit(circuit, noise, SimOptions{true});
  CHECK(ground_state_probability(out, Qubit::Ancilla) ==
        doctest::Approx(1.0 - eta / 2.0).epsilon(1e-12));
  CHECK(ground_state_probability(out, Qubit::Control) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("delay-rb equals mcm-rb when the model is trivial") {
  const NoiseModel noiseless{0.0, KrausChannel::identity(4), KrausChannel::identity(4), {}, {}, "ideal"};
  auto rng_a = make_rng(99);
  auto rng_b = make_rng(99);
  const Circuit rb = generate_mcm_rb(20, 0.035, 0.71, rng_a);
  const Circuit del = generate_delay_rb(20, 0.035, 0.71, rng_b);
  const DensityMatrix out_rb = run_circuit(rb, noiseless);
  const DensityMatrix out_del = run_circuit(del, noiseless);
  CHECK((out_rb.rho - out_del.rho).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("run_circuit rejects malformed circuits") {
  Circuit no_terminal;
  no_terminal.ops.push_back(CircuitOp::control_delay(1.0));
  CHECK_THROWS_AS(run_circuit(no_terminal, NoiseModel{}), std::invalid_argument);

  Circuit bad_duration;
  bad_duration.ops.push_back(CircuitOp::control_delay(0.0));
  bad_duration.ops.push_back(CircuitOp::terminal_measure());
  CHECK_THROWS_AS(run_circuit(bad_duration, NoiseModel{}), std::invalid_argument);
}

TEST_CASE("commuting single-qubit channels on different qubits commute") {
  auto rng = make_rng(mix_seed(kDefaultSeed, 22));
  const KrausChannel on_control = embed_on(depolarizing(0.3), Qubit::Control);
  const KrausChannel on_ancilla =
      embed_on(amplitude_phase_damping({50.0, 40.0, 1.3}), Qubit::Ancilla);
  for (int trial = 0; trial < 20; ++trial) {
    // Random two-qubit pure state.
    Eigen::Vector4cd psi;
    for (int i = 0; i < 4; ++i) {
      psi(i) = Complex{std::uniform_real_distribution<double>(-1, 1)(rng),
                       std::uniform_real_distribution<double>(-1, 1)(rng)};
    }
    psi.normalize();
    const DensityMatrix dm{psi * psi.adjoint()};
    const DensityMatrix ab = apply_kraus(apply_kraus(dm, on_control), on_ancilla);
    const DensityMatrix ba = apply_kraus(apply_kraus(dm, on_ancilla), on_control);
    CHECK((ab.rho - ba.rho).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("sample_shots covers exact mode, degenerate p, and the binomial spread") {
  auto rng = make_rng(777);
  CHECK(sample_shots(0.73, 0, rng) == 0.73);
  CHECK(sample_shots(1.0, 1024, rng) == 1.0);
  CHECK(sample_shots(0.0, 1024, rng) == 0.0);

  // Estimator standard deviation should be close to sqrt(p(1-p)/n) = 0.015625.
  const int trials = 4000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double est = sample_shots(0.5, 1024, rng);
    sum += est;
    sum_sq += est * est;
  }
  const double mean = sum / trials;
  const double var = sum_sq / trials - mean * mean;
  CHECK(std::sqrt(var) == doctest::Approx(0.015625).epsilon(0.08));

  CHECK_THROWS_AS(sample_shots(1.5, 10, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_shots(0.5, -1, rng), std::invalid_argument);
}

TEST_CASE("density invariants hold after every operation in validate mode") {
  // A deliberately noisy scenario, run with per-op validation enabled.
  ScenarioParams params;
  params.eta = 0.2;
  const NoiseModel noise = build_noise_model(Scenario::NonQnd, params);
  auto rng = make_rng(mix_seed(kDefaultSeed, 23));
  const Circuit circuit = generate_mcm_rb(40, 0.035, 0.71, rng);
  const DensityMatrix out = run_circuit(circuit, noise, SimOptions{true});
  validate_density(out);
}
