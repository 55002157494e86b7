// Copyright 2026 The revsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REVSIM_RNG_HPP
#define REVSIM_RNG_HPP

#include <array>
#include <cstdint>

#include "revsim/bitstring.hpp"

namespace revsim {

/// Stream-derivation constant (odd, the SplitMix64 increment).
inline constexpr std::uint64_t kStreamGamma = 0x9E3779B97F4A7C15ull;

/// SplitMix64 finalizer. Full-avalanche 64-bit mix; bijective.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic, splittable random stream: xoshiro256** seeded via SplitMix64.
///
/// Derivation scheme (fixed; golden values depend on it):
///   seed     = mix64(master_seed XOR (stream_index * kStreamGamma))
///   state[i] = SplitMix64(seed).next(), i = 0..3
/// where SplitMix64.next() adds kStreamGamma to its counter and applies mix64.
/// Identical (master_seed, stream_index) pairs always reproduce the same
/// sequence; distinct stream indices give statistically independent streams.
///
/// Streams are single-owner: movable, not copyable. Parallel work derives its
/// own streams instead of sharing one.
class RngStream {
 public:
  static RngStream derive(std::uint64_t master_seed, std::uint64_t stream_index);

  RngStream(const RngStream&) = delete;
  RngStream& operator=(const RngStream&) = delete;
  RngStream(RngStream&&) = default;
  RngStream& operator=(RngStream&&) = default;

  /// Next raw 64-bit output (xoshiro256**).
  std::uint64_t next_u64();

  /// Unbiased uniform draw from [0, bound). bound must be >= 1. Consumes a
  /// variable number of raw outputs (rejection from the top remainder).
  std::uint64_t uniform_below(std::uint64_t bound);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

 private:
  RngStream(std::array<std::uint64_t, 4> state, std::uint64_t master_seed,
            std::uint64_t stream_index)
      : state_(state), master_seed_(master_seed), stream_index_(stream_index) {}

  std::array<std::uint64_t, 4> state_;
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
};

/// Uniform n-line value: every one of the 2^width values has probability
/// 2^-width. Consumes exactly one raw output per call.
BitString random_bitstring(int width, RngStream& stream);

}  // namespace revsim

#endif  // REVSIM_RNG_HPP
