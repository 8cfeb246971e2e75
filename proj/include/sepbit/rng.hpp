// Copyright 2026 The sepbit Authors.
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

/**
 * @file rng.hpp
 * Deterministic stream RNG used by every randomized routine in the library.
 *
 * SplitMix64 (Steele, Lea & Flood; public-domain reference implementation)
 * is used instead of std::mt19937 because the library derives a fresh,
 * independent sub-stream per Monte Carlo round / per optimizer restart
 * (stream index folded into the seed). SplitMix64 streams cost two words
 * of state, pass BigCrush, and make derived streams trivially reproducible.
 */

#pragma once

#include <cmath>
#include <cstdint>

namespace sepbit {

/// Deterministic 64-bit stream generator (SplitMix64).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Next raw 64-bit value.
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Modulo bias is < n * 2^-64, irrelevant for
  /// the small ranges used here; determinism is what matters.
  int next_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  /// Standard normal via Box-Muller (consumes two uniforms).
  double next_normal() {
    // Guard against log(0): the shifted uniform lies in (0, 1].
    double u1 = 1.0 - next_double();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t state_;
};

/// Derives the sub-stream generator for (seed, stream index). Used for
/// per-round and per-restart streams so evaluation order never matters.
/// The index is spread by the golden-ratio multiplier before combining so
/// that nearby seeds do not alias index-shifted copies of each other's
/// streams (seed + index would make seed 7, round r replay seed 13,
/// round r - 6).
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace sepbit
