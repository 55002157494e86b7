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

#include "revsim/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "revsim/exceptions.hpp"

namespace revsim {

namespace {

void check_line_range(int line, const char* what) {
  if (line < 0 || line >= kMaxWidth) {
    throw std::invalid_argument(std::string(what) + " line " + std::to_string(line) +
                                " out of range [0, 64)");
  }
}

}  // namespace

Gate::Gate(int target, std::span<const Control> controls)
    : target_(target), positive_(0), negative_(0) {
  check_line_range(target, "target");
  for (const Control& c : controls) {
    check_line_range(c.line, "control");
    if (c.line == target) {
      throw std::invalid_argument("control line " + std::to_string(c.line) +
                                  " equals the target line");
    }
    const std::uint64_t bit = std::uint64_t{1} << c.line;
    if ((positive_ | negative_) & bit) {
      throw std::invalid_argument("duplicate control line " + std::to_string(c.line));
    }
    (c.polarity == Polarity::positive ? positive_ : negative_) |= bit;
  }
}

Gate Gate::from_masks(int target, std::uint64_t positive_mask,
                      std::uint64_t negative_mask) {
  check_line_range(target, "target");
  if (positive_mask & negative_mask) {
    throw std::invalid_argument("a control line appears with both polarities");
  }
  if ((positive_mask | negative_mask) & (std::uint64_t{1} << target)) {
    throw std::invalid_argument("target line appears among the controls");
  }
  return Gate(target, positive_mask, negative_mask);
}

std::vector<Control> Gate::controls() const {
  std::vector<Control> out;
  out.reserve(static_cast<std::size_t>(control_count()));
  for (int line = 0; line < kMaxWidth; ++line) {
    const std::uint64_t bit = std::uint64_t{1} << line;
    if (positive_ & bit) out.push_back({line, Polarity::positive});
    if (negative_ & bit) out.push_back({line, Polarity::negative});
  }
  return out;
}

int Gate::max_line() const noexcept {
  const std::uint64_t all = positive_ | negative_;
  const int top_control = all ? 63 - __builtin_clzll(all) : -1;
  return std::max(target_, top_control);
}

Circuit::Circuit(int width, std::vector<Gate> gates)
    : width_(width), gates_(std::move(gates)) {
  if (width < 1 || width > kMaxWidth) {
    throw std::invalid_argument("Circuit width must be in [1, 64], got " +
                                std::to_string(width));
  }
  for (const Gate& gate : gates_) {
    if (gate.max_line() >= width) {
      throw std::invalid_argument("gate touches line " +
                                  std::to_string(gate.max_line()) +
                                  " beyond circuit width " + std::to_string(width));
    }
  }
}

PermTable::PermTable(int width, std::vector<std::uint32_t> images)
    : width_(width), images_(std::move(images)) {
  if (width < 1 || width > kMaxTableWidth) {
    throw std::invalid_argument("PermTable width must be in [1, 20], got " +
                                std::to_string(width));
  }
  const std::size_t size = std::size_t{1} << width;
  if (images_.size() != size) {
    throw std::invalid_argument("PermTable expects " + std::to_string(size) +
                                " images, got " + std::to_string(images_.size()));
  }
  std::vector<bool> seen(size, false);
  for (std::uint32_t image : images_) {
    if (image >= size || seen[image]) {
      throw std::invalid_argument("PermTable images are not a permutation");
    }
    seen[image] = true;
  }
}

bool PermTable::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

int GatePolicy::resolved_max_controls(int width) const {
  return max_controls < 0 ? std::min(4, width - 1) : max_controls;
}

void GatePolicy::validate(int width) const {
  const int max = resolved_max_controls(width);
  if (min_controls < 0 || max < min_controls) {
    throw std::invalid_argument("GatePolicy control range is empty");
  }
  if (max > width - 1) {
    throw std::invalid_argument("GatePolicy allows " + std::to_string(max) +
                                " controls but only " + std::to_string(width - 1) +
                                " non-target lines exist");
  }
}

BitString apply_gate(const Gate& gate, const BitString& x) {
  if (gate.max_line() >= x.width()) {
    throw std::invalid_argument("gate touches line " + std::to_string(gate.max_line()) +
                                " beyond value width " + std::to_string(x.width()));
  }
  return BitString(x.width(), gate.apply(x.bits()));
}

BitString simulate(const Circuit& circuit, const BitString& x) {
  if (x.width() != circuit.width()) {
    throw std::invalid_argument("value width " + std::to_string(x.width()) +
                                " does not match circuit width " +
                                std::to_string(circuit.width()));
  }
  return BitString(x.width(), simulate_raw(circuit, x.bits()));
}

Circuit invert(const Circuit& circuit) {
  std::vector<Gate> reversed(circuit.gates().rbegin(), circuit.gates().rend());
  return Circuit(circuit.width(), std::move(reversed));
}

Circuit concat(const Circuit& first, const Circuit& then) {
  if (first.width() != then.width()) {
    throw std::invalid_argument("cannot concatenate circuits of widths " +
                                std::to_string(first.width()) + " and " +
                                std::to_string(then.width()));
  }
  std::vector<Gate> gates(first.gates().begin(), first.gates().end());
  gates.insert(gates.end(), then.gates().begin(), then.gates().end());
  return Circuit(first.width(), std::move(gates));
}

PermTable permutation_table(const Circuit& circuit) {
  if (circuit.width() > kMaxTableWidth) {
    throw CapacityError("permutation_table is capped at width 20, got " +
                        std::to_string(circuit.width()));
  }
  const std::size_t size = std::size_t{1} << circuit.width();
  std::vector<std::uint32_t> images(size);
  for (std::size_t x = 0; x < size; ++x) {
    images[x] = static_cast<std::uint32_t>(simulate_raw(circuit, x));
  }
  return PermTable(circuit.width(), std::move(images));
}

Circuit random_circuit(int width, long long gate_count, RngStream& stream,
                       const GatePolicy& policy) {
  if (width < 1 || width > kMaxWidth) {
    throw std::invalid_argument("random_circuit width must be in [1, 64], got " +
                                std::to_string(width));
  }
  if (gate_count < 0) {
    throw std::invalid_argument("random_circuit gate count must be >= 0");
  }
  policy.validate(width);
  const int min_controls = policy.min_controls;
  const int max_controls = policy.resolved_max_controls(width);
  const auto n = static_cast<std::uint64_t>(width);

  std::vector<Gate> gates;
  gates.reserve(static_cast<std::size_t>(gate_count));
  for (long long i = 0; i < gate_count; ++i) {
    const int count = min_controls + static_cast<int>(stream.uniform_below(
                                         static_cast<std::uint64_t>(max_controls - min_controls + 1)));
    const int target = static_cast<int>(stream.uniform_below(n));
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
    std::uint64_t taken = std::uint64_t{1} << target;
    for (int c = 0; c < count; ++c) {
      for (;;) {
        const int line = static_cast<int>(stream.uniform_below(n));
        const std::uint64_t bit = std::uint64_t{1} << line;
        if (taken & bit) continue;
        taken |= bit;
        const bool negate = policy.allow_negative && stream.uniform_below(2) == 1;
        (negate ? negative : positive) |= bit;
        break;
      }
    }
    gates.push_back(Gate::from_masks(target, positive, negative));
  }
  return Circuit(width, std::move(gates));
}

}  // namespace revsim
