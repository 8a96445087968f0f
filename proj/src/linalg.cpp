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

#include "mcmrb/linalg.hpp"

#include <array>
#include <stdexcept>

namespace mcmrb {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

const Eigen::Matrix2cd& pauli(int index) {
  static const std::array<Eigen::Matrix2cd, 4> kPaulis = [] {
    std::array<Eigen::Matrix2cd, 4> p;
    p[0] << 1, 0, 0, 1;
    p[1] << 0, 1, 1, 0;
    p[2] << 0, -kImag, kImag, 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  if (index < 0 || index > 3) {
    throw std::out_of_range("pauli index must be in [0, 4)");
  }
  return kPaulis[static_cast<std::size_t>(index)];
}

Eigen::MatrixXcd pauli_op(int n_qubits, int index) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = n_qubits - 1; q >= 0; --q) {
    const int digit = (index >> (2 * q)) & 3;
    out = kron(out, pauli(digit));
  }
  return out;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  return (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double phase_aligned_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const double mag = std::abs(overlap);
  // Align b's phase with a, then subtract directly; computing the distance
  // from the trace alone loses precision near zero.
  const Complex phase = mag > 0 ? overlap / mag : Complex{1.0, 0.0};
  return (a - phase * b).norm();
}

}  // namespace mcmrb
