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

#include <random>
#include <span>

#include <Eigen/Dense>

namespace mcmrb {

inline constexpr int kCliffordGroupOrder = 24;

/// One of the 24 single-qubit Clifford group elements. Elements are plain
/// indices into a table of canonical unitary representatives built once from
/// {H, S} generator products; composition and inversion are table lookups.
class CliffordElement {
 public:
  CliffordElement() = default;  // identity

  static CliffordElement from_index(int index);

  int index() const { return index_; }

  /// Canonical 2x2 representative. Fixed for the lifetime of the process and
  /// identical across runs.
  const Eigen::Matrix2cd& unitary() const;

  friend bool operator==(CliffordElement a, CliffordElement b) { return a.index_ == b.index_; }

 private:
  explicit CliffordElement(int index) : index_(index) {}
  int index_ = 0;
};

CliffordElement identity_clifford();

/// Group product for "apply a, then b": representative equals b.unitary() *
/// a.unitary() up to global phase.
CliffordElement compose(CliffordElement a, CliffordElement b);

CliffordElement inverse(CliffordElement a);

/// Element undoing the whole sequence (first element applied first). Empty
/// sequences invert to the identity.
CliffordElement inverse_of_sequence(std::span<const CliffordElement> seq);

/// Uniform draw over the 24 elements, deterministic given the stream state.
CliffordElement random_clifford(std::mt19937_64& rng);

}  // namespace mcmrb
