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

#include "mcmrb/density_matrix.hpp"

#include <algorithm>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mcmrb {
namespace {

Eigen::Vector2cd basis_state(InitState s) {
  Eigen::Vector2cd v;
  v << (s == InitState::Ground ? 1.0 : 0.0), (s == InitState::Excited ? 1.0 : 0.0);
  return v;
}

void require_dims(int got, int want, const char* what) {
  if (got != want) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (got " << got << ", expected " << want << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

const char* to_string(Qubit q) { return q == Qubit::Control ? "control" : "ancilla"; }

DensityMatrix DensityMatrix::ground(int num_qubits) {
  const int d = num_qubits == 2 ? 4 : 2;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  rho(0, 0) = 1.0;
  return DensityMatrix{std::move(rho)};
}

DensityMatrix DensityMatrix::two_qubit(InitState ancilla, InitState control) {
  const Eigen::VectorXcd psi = kron(basis_state(ancilla), basis_state(control));
  return DensityMatrix{psi * psi.adjoint()};
}

KrausChannel KrausChannel::identity(int dim) {
  return KrausChannel{{Eigen::MatrixXcd::Identity(dim, dim)}};
}

KrausChannel KrausChannel::from_unitary(const Eigen::MatrixXcd& u) {
  if (!is_unitary(u)) {
    throw std::invalid_argument("from_unitary: matrix is not unitary within 1e-12");
  }
  return KrausChannel{{u}};
}

KrausChannel make_kraus_channel(std::vector<Eigen::MatrixXcd> ops, double tol) {
  KrausChannel ch{std::move(ops)};
  if (ch.ops.empty()) throw std::invalid_argument("kraus channel needs at least one operator");
  if (!is_trace_preserving(ch, tol)) {
    throw std::invalid_argument("kraus operators do not satisfy sum K^dag K = I");
  }
  return ch;
}

bool is_trace_preserving(const KrausChannel& ch, double tol) {
  if (ch.ops.empty()) return false;
  const int d = ch.dim();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& k : ch.ops) {
    if (k.rows() != d || k.cols() != d) return false;
    sum += k.adjoint() * k;
  }
  return (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

KrausChannel embed_on(const KrausChannel& ch, Qubit target) {
  require_dims(ch.dim(), 2, "embed_on");
  KrausChannel out;
  out.ops.reserve(ch.ops.size());
  for (const auto& k : ch.ops) out.ops.push_back(embed_on(k, target));
  return out;
}

Eigen::MatrixXcd embed_on(const Eigen::MatrixXcd& u, Qubit target) {
  require_dims(static_cast<int>(u.rows()), 2, "embed_on");
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  return target == Qubit::Ancilla ? kron(u, id) : kron(id, u);
}

DensityMatrix apply_unitary(const DensityMatrix& dm, const Eigen::MatrixXcd& u) {
  require_dims(static_cast<int>(u.rows()), dm.dim(), "apply_unitary");
  if (!is_unitary(u)) {
    throw std::invalid_argument("apply_unitary: matrix is not unitary within 1e-12");
  }
  return DensityMatrix{u * dm.rho * u.adjoint()};
}

DensityMatrix apply_unitary(const DensityMatrix& dm, const Eigen::MatrixXcd& u, Qubit target) {
  require_dims(dm.dim(), 4, "apply_unitary(target)");
  return apply_unitary(dm, embed_on(u, target));
}

DensityMatrix apply_kraus(const DensityMatrix& dm, const KrausChannel& ch) {
  require_dims(ch.dim(), dm.dim(), "apply_kraus");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dm.dim(), dm.dim());
  for (const auto& k : ch.ops) out += k * dm.rho * k.adjoint();
  return DensityMatrix{std::move(out)};
}

DensityMatrix apply_kraus(const DensityMatrix& dm, const KrausChannel& ch, Qubit target) {
  require_dims(dm.dim(), 4, "apply_kraus(target)");
  return apply_kraus(dm, embed_on(ch, target));
}

DensityMatrix mid_measure_ancilla(const DensityMatrix& dm) {
  require_dims(dm.dim(), 4, "mid_measure_ancilla");
  Eigen::MatrixXcd out = dm.rho;
  out.block(0, 2, 2, 2).setZero();
  out.block(2, 0, 2, 2).setZero();
  return DensityMatrix{std::move(out)};
}

double ground_state_probability(const DensityMatrix& dm, Qubit q) {
  double p = 0.0;
  if (dm.dim() == 2) {
    p = dm.rho(0, 0).real();
  } else if (q == Qubit::Ancilla) {
    p = (dm.rho(0, 0) + dm.rho(1, 1)).real();
  } else {
    p = (dm.rho(0, 0) + dm.rho(2, 2)).real();
  }
  // Clamp away sub-epsilon drift from long channel compositions.
  return std::clamp(p, 0.0, 1.0);
}

void validate_density(const DensityMatrix& dm, double tol) {
  const auto fail = [](const char* what) {
    throw std::runtime_error(std::string("density matrix invariant violated: ") + what);
  };
  if (dm.dim() != 2 && dm.dim() != 4) fail("dimension");
  if (!is_hermitian(dm.rho, tol)) fail("hermiticity");
  if (std::abs(dm.rho.trace().real() - 1.0) > tol || std::abs(dm.rho.trace().imag()) > tol) {
    fail("unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dm.rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) fail("positivity");
}

}  // namespace mcmrb
