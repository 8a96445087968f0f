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

#include <array>
#include <string>
#include <vector>

namespace mcmrb {

enum class Protocol { McmRb = 0, DelayRb = 1, McmRep = 2 };

inline constexpr std::array<Protocol, 3> kProtocols = {Protocol::McmRb, Protocol::DelayRb,
                                                       Protocol::McmRep};

const char* to_string(Protocol p);

/// Ground-state probability versus sequence length, with the per-length
/// scatter over random sequences.
struct DecayCurve {
  std::vector<int> lengths;
  std::vector<std::vector<double>> samples;  // one vector per length
  std::vector<double> mean;
  std::vector<double> stddev;                // sample standard deviation

  /// Recomputes mean/stddev from samples (stddev = 0 for single samples).
  void recompute_stats();
};

/// Parameters of P0 = A * alpha^N + B with local-quadratic standard errors.
struct FitResult {
  double A = 0.0;
  double alpha = 1.0;
  double B = 0.0;
  double sigma_A = 0.0;
  double sigma_alpha = 0.0;
  double sigma_B = 0.0;
  double residual_rms = 0.0;  // unweighted rms against the mean curve
  bool converged = false;
  bool degenerate = false;  // flat curve or unidentifiable alpha
};

/// Weighted nonlinear least squares of the mean curve, weights 1/stddev^2
/// (unit weights when the scatter is zero), with 0 <= alpha <= 1 and
/// 0 <= B <= 1. Multistart damped Gauss-Newton; never aborts once started,
/// the best effort is returned with converged=false on failure.
/// Throws std::invalid_argument for fewer than 4 distinct lengths.
FitResult fit_exponential(const DecayCurve& curve);

/// Error per Clifford/measurement from a decay parameter: (1 - alpha) / 2.
double epc_from_alpha(double alpha);

struct ValueWithSigma {
  double value = 0.0;
  double sigma = 0.0;
};

/// Interleaved-RB estimate (1 - alpha_rb/alpha_del)/2 with first-order
/// uncertainty propagation. Throws std::domain_error when the reference decay
/// is too small to divide by.
ValueWithSigma irb_estimate(double alpha_rb, double sigma_rb, double alpha_del, double sigma_del);

/// Ground-state probability after N measurements when each flips the state
/// with probability p: the chance of an even number of flips,
/// (1 + (1-2p)^N) / 2.
double pgs_closed_form(double p, int n);

/// Same quantity as an explicit sum over even flip counts,
/// sum_k C(N,2k) p^(2k) (1-p)^(N-2k), evaluated in a stable term recurrence.
/// Independent of pgs_closed_form; intended as its oracle.
double pgs_brute_force(double p, int n);

/// The six EPC/EPM estimates plus the IRB comparison, indexed
/// [protocol][qubit] with Qubit::Ancilla = 0, Qubit::Control = 1.
struct SuiteResult {
  std::array<std::array<FitResult, 2>, 3> fits;
  std::array<std::array<ValueWithSigma, 2>, 3> eps;
  ValueWithSigma eps_irb;
  bool has_irb = false;
  std::string label;
};

/// Fits all six curves and forms the IRB estimate from the control decays.
/// exact_mode widens sigma floors from residuals so z-tests stay meaningful.
SuiteResult analyze_curves(const std::array<std::array<DecayCurve, 2>, 3>& curves,
                           bool exact_mode = true);

enum class ErrorSignature {
  NoMeasurementInducedError,
  NonQndMeasurement,
  MeasurementInducedControlError,
  MeasurementInducedTwoQubitError,
  RbCrossTalk,
};

const char* to_string(ErrorSignature s);

struct ClassifierThresholds {
  double abs_floor = 1e-3;  // "approximately zero" scale
  double z = 2.0;           // combined-standard-error separation
};

struct SignatureVerdict {
  ErrorSignature signature;
  std::string evidence;
  bool collision_hint = false;
};

struct Classification {
  std::vector<SignatureVerdict> signatures;  // possibly empty
  ClassifierThresholds thresholds;
};

/// Applies the error-signature relations between the six EPC/EPM values.
/// "~ 0" means below max(abs_floor, z*sigma); "x > y" means separation by the
/// same scale. Multiple signatures may hold at once.
Classification classify_signature(const SuiteResult& result, const ClassifierThresholds& th = {});

}  // namespace mcmrb
