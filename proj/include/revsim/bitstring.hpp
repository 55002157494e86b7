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

#ifndef REVSIM_BITSTRING_HPP
#define REVSIM_BITSTRING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace revsim {

inline constexpr int kMaxWidth = 64;

/// All-ones mask covering lines 0..width-1.
constexpr std::uint64_t width_mask(int width) {
  return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

/// An n-line input/output value, line i stored at bit i. Widths run from 1 to
/// 64 so a value is always one machine word. Immutable after construction.
class BitString {
 public:
  BitString(int width, std::uint64_t bits) : width_(width), bits_(bits) {
    if (width < 1 || width > kMaxWidth) {
      throw std::invalid_argument("BitString width must be in [1, 64], got " +
                                  std::to_string(width));
    }
    if ((bits & ~width_mask(width)) != 0) {
      throw std::invalid_argument("BitString has bits set above line " +
                                  std::to_string(width - 1));
    }
  }

  static BitString zeros(int width) { return BitString(width, 0); }

  int width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool bit(int line) const {
    check_line(line);
    return (bits_ >> line) & 1;
  }

  BitString with_bit_flipped(int line) const {
    check_line(line);
    return BitString(width_, bits_ ^ (std::uint64_t{1} << line));
  }

  int popcount() const noexcept { return __builtin_popcountll(bits_); }

  /// Binary rendering, most significant character = highest line.
  std::string to_binary() const {
    std::string out(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i) {
      if ((bits_ >> i) & 1) out[static_cast<std::size_t>(width_ - 1 - i)] = '1';
    }
    return out;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  void check_line(int line) const {
    if (line < 0 || line >= width_) {
      throw std::invalid_argument("line " + std::to_string(line) +
                                  " out of range for width " +
                                  std::to_string(width_));
    }
  }

  int width_;
  std::uint64_t bits_;
};

}  // namespace revsim

#endif  // REVSIM_BITSTRING_HPP
