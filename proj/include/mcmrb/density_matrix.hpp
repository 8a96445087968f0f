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

#include <Eigen/Dense>

#include "mcmrb/linalg.hpp"

namespace mcmrb {

/// Tensor order of a simulated pair is ancilla (outer) x control (inner), so
/// two-qubit basis states read |ancilla control>.
enum class Qubit { Ancilla = 0, Control = 1 };

enum class InitState { Ground, Excited };

const char* to_string(Qubit q);

struct DensityMatrix {
  Eigen::MatrixXcd rho;

  int dim() const { return static_cast<int>(rho.rows()); }
  int num_qubits() const { return dim() == 4 ? 2 : 1; }

  static DensityMatrix ground(int num_qubits);
  static DensityMatrix two_qubit(InitState ancilla, InitState control);
};

/// Trace-preserving map in Kraus form: rho -> sum_i K_i rho K_i^dag.
struct KrausChannel {
  std::vector<Eigen::MatrixXcd> ops;

  int dim() const { return ops.empty() ? 0 : static_cast<int>(ops.front().rows()); }

  static KrausChannel identity(int dim);
  static KrausChannel from_unitary(const Eigen::MatrixXcd& u);
};

/// Validates completeness (sum K^dag K = I within tol) before accepting the
/// operator set; throws std::invalid_argument otherwise.
KrausChannel make_kraus_channel(std::vector<Eigen::MatrixXcd> ops, double tol = 1e-10);

bool is_trace_preserving(const KrausChannel& ch, double tol = 1e-10);

/// Lifts a single-qubit channel or unitary onto the two-qubit space.
KrausChannel embed_on(const KrausChannel& ch, Qubit target);
Eigen::MatrixXcd embed_on(const Eigen::MatrixXcd& u, Qubit target);

DensityMatrix apply_unitary(const DensityMatrix& dm, const Eigen::MatrixXcd& u);
DensityMatrix apply_unitary(const DensityMatrix& dm, const Eigen::MatrixXcd& u, Qubit target);
DensityMatrix apply_kraus(const DensityMatrix& dm, const KrausChannel& ch);
DensityMatrix apply_kraus(const DensityMatrix& dm, const KrausChannel& ch, Qubit target);

/// Outcome-discarded ancilla measurement: zeroes ancilla coherences, i.e. the
/// completely dephasing channel {|0><0|, |1><1|} on the ancilla factor.
DensityMatrix mid_measure_ancilla(const DensityMatrix& dm);

double ground_state_probability(const DensityMatrix& dm, Qubit q);

/// Throws std::runtime_error when hermiticity, unit trace, or positivity
/// (eigenvalues >= -tol) is violated.
void validate_density(const DensityMatrix& dm, double tol = 1e-9);

}  // namespace mcmrb
