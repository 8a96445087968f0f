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

#include "mcmrb/channel_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace mcmrb {
namespace {

Eigen::MatrixXcd apply_channel(const KrausChannel& channel, const Eigen::MatrixXcd& op) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(op.rows(), op.cols());
  for (const auto& k : channel.ops) out += k * op * k.adjoint();
  return out;
}

}  // namespace

ChoiState choi_of_channel(const KrausChannel& channel) {
  const int d = channel.dim();
  if (d != 2 && d != 4) throw std::invalid_argument("choi_of_channel: channel must act on 1 or 2 qubits");
  ChoiState choi;
  choi.dim = d;
  choi.matrix = Eigen::MatrixXcd::Zero(d * d, d * d);
  Eigen::MatrixXcd basis_op = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      basis_op.setZero();
      basis_op(j, k) = 1.0;
      choi.matrix.block(j * d, k * d, d, d) = apply_channel(channel, basis_op) / double(d);
    }
  }
  return choi;
}

ChoiState choi_of_unitary(const Eigen::MatrixXcd& u) {
  return choi_of_channel(KrausChannel::from_unitary(u));
}

ChoiState effective_control_channel(const ChoiState& two_qubit_choi) {
  if (two_qubit_choi.dim != 4) {
    throw std::invalid_argument("effective_control_channel: expected a two-qubit Choi state");
  }
  const auto& sigma = two_qubit_choi.matrix;
  ChoiState out;
  out.dim = 2;
  out.matrix = Eigen::MatrixXcd::Zero(4, 4);
  // Reference index j = 4*ja + 2*jc is restricted to ja = 0; the output
  // ancilla index ma is traced over.
  for (int jc = 0; jc < 2; ++jc) {
    for (int kc = 0; kc < 2; ++kc) {
      for (int mc = 0; mc < 2; ++mc) {
        for (int nc = 0; nc < 2; ++nc) {
          Complex sum = 0.0;
          for (int ma = 0; ma < 2; ++ma) {
            sum += sigma(jc * 4 + ma * 2 + mc, kc * 4 + ma * 2 + nc);
          }
          out.matrix(jc * 2 + mc, kc * 2 + nc) = sum;
        }
      }
    }
  }
  const double trace = out.matrix.trace().real();
  if (trace <= 0.0) throw std::runtime_error("effective_control_channel: vanishing trace");
  out.matrix /= trace;
  return out;
}

double avg_gate_fidelity(const ChoiState& choi) {
  const int d = choi.dim;
  // <Phi| sigma |Phi> with |Phi> = (1/sqrt d) sum_j |jj>.
  Complex overlap = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      overlap += choi.matrix(j * d + j, k * d + k);
    }
  }
  const double process_fidelity = overlap.real() / d;
  return (d * process_fidelity + 1.0) / (d + 1.0);
}

double infidelity_stark(double phi) { return (1.0 - std::cos(2.0 * phi)) / 3.0; }

double infidelity_cross_measurement(double p_m) {
  if (!(p_m >= 0.0 && p_m <= 1.0)) {
    throw std::invalid_argument("infidelity_cross_measurement: p_m out of [0, 1]");
  }
  return p_m / 3.0;
}

PauliTransferMatrix ptm_of_channel(const KrausChannel& channel) {
  const int d = channel.dim();
  if (d != 2 && d != 4) throw std::invalid_argument("ptm_of_channel: channel must act on 1 or 2 qubits");
  const int n_qubits = d == 4 ? 2 : 1;
  const int size = d * d;
  PauliTransferMatrix ptm;
  ptm.n_qubits = n_qubits;
  ptm.matrix.resize(size, size);
  for (int j = 0; j < size; ++j) {
    const Eigen::MatrixXcd mapped = apply_channel(channel, pauli_op(n_qubits, j));
    for (int i = 0; i < size; ++i) {
      ptm.matrix(i, j) = (pauli_op(n_qubits, i) * mapped).trace().real() / d;
    }
  }
  return ptm;
}

PauliTransferMatrix ptm_of_choi(const ChoiState& choi) {
  const int d = choi.dim;
  const int n_qubits = d == 4 ? 2 : 1;
  const int size = d * d;
  PauliTransferMatrix ptm;
  ptm.n_qubits = n_qubits;
  ptm.matrix.resize(size, size);
  // R_ij = Tr[(P_j^T (x) P_i) sigma]; the reference copy carries the
  // transposed input Pauli.
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const Eigen::MatrixXcd probe =
          kron(pauli_op(n_qubits, j).transpose(), pauli_op(n_qubits, i));
      ptm.matrix(i, j) = (probe * choi.matrix).trace().real();
    }
  }
  return ptm;
}

PauliTransferMatrix threshold_ptm(const PauliTransferMatrix& ptm, double eps_irb,
                                  const PauliTransferMatrix& ideal) {
  if (eps_irb < 0.0) throw std::invalid_argument("threshold_ptm: negative eps_irb");
  if (ideal.matrix.rows() != ptm.matrix.rows() || ideal.matrix.cols() != ptm.matrix.cols()) {
    throw std::invalid_argument("threshold_ptm: ideal pattern shape mismatch");
  }
  const double threshold = std::sqrt(6.0 * eps_irb);
  PauliTransferMatrix out = ptm;
  for (Eigen::Index i = 0; i < out.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.matrix.cols(); ++j) {
      const bool ideal_entry = std::abs(ideal.matrix(i, j)) > 1e-12;
      if (!ideal_entry && std::abs(out.matrix(i, j)) <= threshold) out.matrix(i, j) = 0.0;
    }
  }
  return out;
}

std::vector<std::string> pauli_labels(int n_qubits) {
  static const char* kNames = "IXYZ";
  const int size = 1 << (2 * n_qubits);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(size));
  for (int idx = 0; idx < size; ++idx) {
    std::string label;
    for (int q = n_qubits - 1; q >= 0; --q) {
      label.push_back(kNames[(idx >> (2 * q)) & 3]);
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

}  // namespace mcmrb
