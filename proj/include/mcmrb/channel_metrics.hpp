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

#include <string>
#include <vector>

#include "mcmrb/density_matrix.hpp"

namespace mcmrb {

/// Choi state sigma = (1/d) sum_{jk} |j><k| (x) E(|j><k|): a trace-one state
/// on the doubled space, with the reference copy as the outer factor.
struct ChoiState {
  int dim = 2;  // Hilbert dimension d of the channel
  Eigen::MatrixXcd matrix;  // d^2 x d^2
};

ChoiState choi_of_channel(const KrausChannel& channel);
ChoiState choi_of_unitary(const Eigen::MatrixXcd& u);

/// Effective channel seen by the control when the ancilla enters in the
/// ground state: projects the reference ancilla onto |0>, renormalizes, and
/// traces both ancilla copies out of a two-qubit Choi state.
ChoiState effective_control_channel(const ChoiState& two_qubit_choi);

/// F_avg = (d F_pro + 1) / (d + 1) with the process fidelity read from the
/// Choi overlap with the maximally entangled state.
double avg_gate_fidelity(const ChoiState& choi);

/// Closed forms for the single-qubit control error channels.
double infidelity_stark(double phi);
double infidelity_cross_measurement(double p_m);

/// R_ij = (1/d) Tr[P_i E(P_j)] over the lexicographic I,X,Y,Z basis per
/// qubit, ancilla as the outer qubit.
struct PauliTransferMatrix {
  int n_qubits = 1;
  Eigen::MatrixXd matrix;  // 4^n x 4^n
};

PauliTransferMatrix ptm_of_channel(const KrausChannel& channel);

/// Same matrix computed from the Choi state instead of the Kraus operators;
/// kept as an independent route for cross-checking.
PauliTransferMatrix ptm_of_choi(const ChoiState& choi);

/// Zeroes entries with magnitude <= sqrt(6 eps_irb) except where the ideal
/// channel's PTM is non-zero; those are kept regardless of magnitude.
PauliTransferMatrix threshold_ptm(const PauliTransferMatrix& ptm, double eps_irb,
                                  const PauliTransferMatrix& ideal);

/// Basis labels matching the PTM ordering ("I","X","Y","Z" / "II","IX",...).
std::vector<std::string> pauli_labels(int n_qubits);

}  // namespace mcmrb
