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

#include "revsim/rng.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace revsim {

namespace {

constexpr std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream RngStream::derive(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::uint64_t counter = mix64(master_seed ^ (stream_index * kStreamGamma));
  std::array<std::uint64_t, 4> state;
  for (auto& word : state) {
    counter += kStreamGamma;
    word = mix64(counter);
  }
  // mix64 is bijective and the four counter values are distinct, so the four
  // state words are pairwise distinct; the all-zero state cannot occur.
  assert(state[0] | state[1] | state[2] | state[3]);
  return RngStream(state, master_seed, stream_index);
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl64(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl64(state_[3], 45);
  return result;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t raw = next_u64();
    if (raw >= threshold) return raw % bound;
  }
}

BitString random_bitstring(int width, RngStream& stream) {
  if (width < 1 || width > kMaxWidth) {
    throw std::invalid_argument("random_bitstring: width must be in [1, 64], got " +
                                std::to_string(width));
  }
  return BitString(width, stream.next_u64() & width_mask(width));
}

}  // namespace revsim
