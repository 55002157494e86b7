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

#ifndef REVSIM_CIRCUIT_HPP
#define REVSIM_CIRCUIT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "revsim/bitstring.hpp"
#include "revsim/rng.hpp"

namespace revsim {

enum class Polarity { positive, negative };

struct Control {
  int line;
  Polarity polarity;

  friend bool operator==(const Control&, const Control&) = default;
};

/// One multi-controlled NOT: flips the target line iff every positive control
/// reads 1 and every negative control reads 0. Controls are kept as bit masks;
/// an MCT gate is its own inverse.
class Gate {
 public:
  Gate(int target, std::span<const Control> controls);
  Gate(int target, std::initializer_list<Control> controls)
      : Gate(target, std::span<const Control>(controls.begin(), controls.end())) {}

  /// Unconditional NOT on `target`.
  static Gate not_gate(int target) { return Gate(target, {}); }

  static Gate from_masks(int target, std::uint64_t positive_mask,
                         std::uint64_t negative_mask);

  int target() const noexcept { return target_; }
  std::uint64_t positive_mask() const noexcept { return positive_; }
  std::uint64_t negative_mask() const noexcept { return negative_; }
  int control_count() const noexcept {
    return __builtin_popcountll(positive_ | negative_);
  }
  /// Controls in ascending line order.
  std::vector<Control> controls() const;
  /// Highest line index touched by this gate.
  int max_line() const noexcept;

  /// Raw single-word application; no width check.
  std::uint64_t apply(std::uint64_t x) const noexcept {
    const std::uint64_t hit = ((x & positive_) == positive_) & ((x & negative_) == 0);
    return x ^ (hit << target_);
  }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(int target, std::uint64_t positive, std::uint64_t negative)
      : target_(target), positive_(positive), negative_(negative) {}

  int target_;
  std::uint64_t positive_;
  std::uint64_t negative_;
};

/// An ordered MCT gate list over `width` lines. Implements a permutation of
/// {0,1}^width by construction (every gate is an involution). Immutable after
/// construction; freely shareable.
class Circuit {
 public:
  explicit Circuit(int width) : Circuit(width, {}) {}
  Circuit(int width, std::vector<Gate> gates);

  int width() const noexcept { return width_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::size_t gate_count() const noexcept { return gates_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_;
  std::vector<Gate> gates_;
};

/// Exhaustive image table: entry x = circuit image of x. Capped at width 20
/// (1M entries); oracle-scale verification only.
class PermTable {
 public:
  PermTable(int width, std::vector<std::uint32_t> images);

  int width() const noexcept { return width_; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  bool is_identity() const;

  friend bool operator==(const PermTable&, const PermTable&) = default;

 private:
  int width_;
  std::vector<std::uint32_t> images_;
};

inline constexpr int kMaxTableWidth = 20;

/// How random_circuit draws each gate. The default keeps gates light: heavy
/// control counts make a random MCT act on almost no inputs.
struct GatePolicy {
  int min_controls = 0;
  /// -1 selects min(4, n - 1).
  int max_controls = -1;
  bool allow_negative = false;

  int resolved_max_controls(int width) const;
  void validate(int width) const;

  friend bool operator==(const GatePolicy&, const GatePolicy&) = default;
};

BitString apply_gate(const Gate& gate, const BitString& x);

/// Left-to-right fold of apply_gate over the gate list.
BitString simulate(const Circuit& circuit, const BitString& x);

/// Hot path used by the equivalence checker and oracles; assumes x fits the
/// circuit width.
inline std::uint64_t simulate_raw(const Circuit& circuit, std::uint64_t x) noexcept {
  for (const Gate& gate : circuit.gates()) x = gate.apply(x);
  return x;
}

/// Reversed gate list; undoes the circuit on every input.
Circuit invert(const Circuit& circuit);

/// Gate list of `first` followed by `then` (apply `first`, then `then`).
Circuit concat(const Circuit& first, const Circuit& then);

PermTable permutation_table(const Circuit& circuit);

/// g random MCT gates: control count uniform over the policy range, target
/// uniform, controls uniform over distinct non-target lines. Deterministic in
/// the stream; the draw order per gate is count, target, then each control
/// line (with its polarity immediately after when negatives are enabled).
Circuit random_circuit(int width, long long gate_count, RngStream& stream,
                       const GatePolicy& policy = {});

}  // namespace revsim

#endif  // REVSIM_CIRCUIT_HPP
