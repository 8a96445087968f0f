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

#include <complex>

#include <Eigen/Dense>

namespace mcmrb {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

/// Kronecker product, left factor outermost.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Single-qubit Pauli matrices in the order I, X, Y, Z.
const Eigen::Matrix2cd& pauli(int index);

/// Tensor product of Paulis over n qubits; index is base-4, leftmost qubit
/// in the highest digit.
Eigen::MatrixXcd pauli_op(int n_qubits, int index);

bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-12);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-10);

/// min over phase z (|z|=1) of ||a - z*b||_F. Both inputs must have equal
/// shape; used for equality checks that ignore global phase.
double phase_aligned_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace mcmrb
