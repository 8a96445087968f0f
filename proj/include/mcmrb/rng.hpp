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

#include <cstdint>
#include <random>

namespace mcmrb {

/// Seed used whenever a config omits one. Never wall-clock.
inline constexpr std::uint64_t kDefaultSeed = 0x6d636d2d7262ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a root seed and up to three task
/// coordinates. Tasks seeded this way are schedule-independent.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ (a + 0x9e3779b97f4a7c15ull));
  h = splitmix64(h ^ (b + 0xbf58476d1ce4e5b9ull));
  h = splitmix64(h ^ (c + 0x94d049bb133111ebull));
  return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

}  // namespace mcmrb
