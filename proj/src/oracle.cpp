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

#include "revsim/oracle.hpp"

#include <stdexcept>
#include <string>

#include "revsim/exceptions.hpp"

namespace revsim {

ExactProbability exact_detection_probability(const Circuit& golden,
                                             const Circuit& candidate) {
  if (golden.width() != candidate.width()) {
    throw std::invalid_argument("circuits have different widths");
  }
  if (golden.width() > kMaxTableWidth) {
    throw CapacityError("exact enumeration is capped at width 20, got " +
                        std::to_string(golden.width()));
  }
  const std::uint64_t size = std::uint64_t{1} << golden.width();
  std::uint64_t mismatches = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    mismatches += simulate_raw(golden, x) != simulate_raw(candidate, x);
  }
  return {mismatches, size};
}

long long count_fixed_points(const PermTable& table) {
  long long fixed = 0;
  const auto images = table.images();
  for (std::size_t x = 0; x < images.size(); ++x) {
    fixed += images[x] == x;
  }
  return fixed;
}

WorstCaseComposition worst_case_composition(int n) {
  if (n < 2) throw std::invalid_argument("composition needs n >= 2 lines");
  if (n > kMaxWidth) throw std::invalid_argument("width must be <= 64");

  std::vector<Control> full_controls;
  for (int line = 0; line < n - 1; ++line) {
    full_controls.push_back({line, Polarity::positive});
  }
  const Gate big_gate(n - 1, full_controls);

  // Same gate minus the control on line 0: the effective error left after the
  // two bit flips cancel against the big gate.
  std::vector<Control> rest_controls(full_controls.begin() + 1, full_controls.end());
  const Gate effective_gate(n - 1, rest_controls);

  const Gate flip = Gate::not_gate(0);
  return {Circuit(n, {big_gate}),
          Circuit(n, {flip, big_gate, flip}),
          Circuit(n, {effective_gate})};
}

namespace {

bool cascade_output(std::uint32_t x, const std::optional<FlipWire>& flip) {
  bool wires[8];
  for (int i = 0; i < 8; ++i) wires[i] = (x >> i) & 1;
  if (flip && flip->layer == 0) wires[flip->index] = !wires[flip->index];

  bool row1[4];
  for (int j = 0; j < 4; ++j) row1[j] = wires[2 * j] && wires[2 * j + 1];
  if (flip && flip->layer == 1) row1[flip->index] = !row1[flip->index];

  bool row2[2];
  for (int j = 0; j < 2; ++j) row2[j] = row1[2 * j] && row1[2 * j + 1];
  if (flip && flip->layer == 2) row2[flip->index] = !row2[flip->index];

  bool y = row2[0] && row2[1];
  if (flip && flip->layer == 3) y = !y;
  return y;
}

}  // namespace

CascadeCount and_cascade_demo(std::optional<FlipWire> flip) {
  if (flip) {
    if (flip->layer < 0 || flip->layer > 3 || flip->index < 0 ||
        flip->index >= (8 >> flip->layer)) {
      throw std::invalid_argument("no wire at layer " + std::to_string(flip->layer) +
                                  ", index " + std::to_string(flip->index));
    }
  }
  int mismatches = 0;
  for (std::uint32_t x = 0; x < 256; ++x) {
    mismatches += cascade_output(x, flip) != cascade_output(x, std::nullopt);
  }
  return {mismatches, 256};
}

}  // namespace revsim
