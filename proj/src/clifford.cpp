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

#include "mcmrb/clifford.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mcmrb/linalg.hpp"

namespace mcmrb {
namespace {

// |Tr(a^dag b)| = 2 iff the unitaries agree up to global phase.
bool same_up_to_phase(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return std::abs((a.adjoint() * b).trace()) > 2.0 - 1e-10;
}

struct GroupTable {
  std::vector<Eigen::Matrix2cd> reps;
  std::array<std::array<int, kCliffordGroupOrder>, kCliffordGroupOrder> product;
  std::array<int, kCliffordGroupOrder> inverse;

  GroupTable() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd h;
    h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    Eigen::Matrix2cd s;
    s << 1, 0, 0, Complex{0, 1};

    // Breadth-first closure of the {H, S} generators, deduplicated up to
    // phase. Index 0 is the identity; the visit order fixes the bijection.
    reps.push_back(Eigen::Matrix2cd::Identity());
    for (std::size_t head = 0; head < reps.size(); ++head) {
      for (const auto& gen : {h, s}) {
        const Eigen::Matrix2cd candidate = gen * reps[head];
        bool known = false;
        for (const auto& rep : reps) {
          if (same_up_to_phase(rep, candidate)) {
            known = true;
            break;
          }
        }
        if (!known) reps.push_back(candidate);
      }
    }
    if (reps.size() != kCliffordGroupOrder) {
      throw std::logic_error("clifford generator closure did not yield 24 elements");
    }

    for (int a = 0; a < kCliffordGroupOrder; ++a) {
      for (int b = 0; b < kCliffordGroupOrder; ++b) {
        product[a][b] = find(reps[b] * reps[a]);
      }
    }
    for (int a = 0; a < kCliffordGroupOrder; ++a) {
      inverse[a] = find(reps[a].adjoint());
    }
  }

  int find(const Eigen::Matrix2cd& u) const {
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
      if (same_up_to_phase(reps[i], u)) return i;
    }
    throw std::logic_error("matrix is not a clifford group element");
  }
};

const GroupTable& table() {
  static const GroupTable t;
  return t;
}

}  // namespace

CliffordElement CliffordElement::from_index(int index) {
  if (index < 0 || index >= kCliffordGroupOrder) {
    throw std::out_of_range("clifford index must be in [0, 24)");
  }
  return CliffordElement{index};
}

const Eigen::Matrix2cd& CliffordElement::unitary() const {
  return table().reps[static_cast<std::size_t>(index_)];
}

CliffordElement identity_clifford() { return CliffordElement{}; }

CliffordElement compose(CliffordElement a, CliffordElement b) {
  return CliffordElement::from_index(table().product[a.index()][b.index()]);
}

CliffordElement inverse(CliffordElement a) {
  return CliffordElement::from_index(table().inverse[a.index()]);
}

CliffordElement inverse_of_sequence(std::span<const CliffordElement> seq) {
  CliffordElement total;
  for (const CliffordElement g : seq) total = compose(total, g);
  return inverse(total);
}

CliffordElement random_clifford(std::mt19937_64& rng) {
  // Modulo bias over 2^64 draws is ~1e-18, far below anything observable.
  return CliffordElement::from_index(static_cast<int>(rng() % kCliffordGroupOrder));
}

}  // namespace mcmrb
