// Copyright 2026 The memaudit Authors
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
#include <limits>
#include <random>

namespace memaudit::rng {

// Every stochastic operation in this project draws from std::mt19937_64,
// whose output sequence is pinned by the C++ standard, through the helpers
// below. std::uniform_int_distribution and friends are deliberately avoided
// because their outputs are implementation-defined; the helpers make the
// exact draw procedure part of this library's contract, so results are
// reproducible bit-for-bit across platforms and compilers.
//
// Documented generator:
//   engine        std::mt19937_64 seeded with the user-supplied 64-bit seed
//   below(n)      rejection sampling: draw x = engine(); accept when
//                 x < 2^64 - (2^64 mod n); return x mod n
//   unit()        (engine() >> 11) * 2^-53, uniform on [0, 1)
//   derive_seed   splitmix64 finalizer of (base XOR index * 0x9E3779B97F4A7C15)

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine{seed}; }

/// Unbiased uniform draw from [0, n). n must be positive.
inline std::uint64_t below(Engine& engine, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return x % n;
}

/// Uniform index into a container of the given size. size must be positive.
inline std::size_t index(Engine& engine, std::size_t size) {
  return static_cast<std::size_t>(below(engine, size));
}

/// Uniform draw from the inclusive range [lo, hi].
inline std::uint64_t in_range(Engine& engine, std::uint64_t lo,
                              std::uint64_t hi) {
  return lo + below(engine, hi - lo + 1);
}

/// Uniform double on [0, 1) with 53 bits of precision.
inline double unit(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Derives a per-item seed from a base seed so items can be processed
/// independently (and in parallel) without sharing a stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t item) {
  std::uint64_t z = base ^ (item * 0x9E3779B97F4A7C15ull);
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace memaudit::rng
