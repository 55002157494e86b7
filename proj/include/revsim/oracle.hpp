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

#ifndef REVSIM_ORACLE_HPP
#define REVSIM_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "revsim/circuit.hpp"

namespace revsim {

/// A detection probability carried as an exact count over 2^width, so tests
/// can assert equality with no tolerance. Equality compares the reduced
/// fractions (64/256 equals 2/8).
struct ExactProbability {
  std::uint64_t numerator;
  std::uint64_t denominator;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }

  friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

/// Fraction of inputs on which the two circuits disagree, by full enumeration.
/// Width is capped at 20.
ExactProbability exact_detection_probability(const Circuit& golden,
                                             const Circuit& candidate);

/// Number of table entries with table[x] = x. A non-identity permutation of
/// 2^n elements has at most 2^n - 2 of them.
long long count_fixed_points(const PermTable& table);

/// The maximal-masking pair: an (n-1)-fold controlled NOT corrupted by a bit
/// flip on its first control line before and after. The two size-1 errors
/// collapse into one effective error of size n-1, detected by only 4 of the
/// 2^n inputs.
struct WorstCaseComposition {
  Circuit ideal;
  Circuit corrupted;
  /// (n-2)-fold controlled NOT on lines 1..n-1; corrupted acts as ideal
  /// followed by this error.
  Circuit effective_error;
};

WorstCaseComposition worst_case_composition(int n);

/// A wire in the 8-input AND-cascade: layer 0 = inputs (8 wires), layer 1 =
/// first AND row outputs (4), layer 2 = second row (2), layer 3 = the final
/// output (1).
struct FlipWire {
  int layer;
  int index;
};

struct CascadeCount {
  int detecting_inputs;
  int total;
};

/// The irreversible contrast demo: y = x8 & ... & x1 computed by a binary AND
/// tree, with one internal wire optionally negated. Returns how many of the
/// 256 inputs see a changed output. Flipping a first-row output is detectable
/// by only 4 inputs.
CascadeCount and_cascade_demo(std::optional<FlipWire> flip);

}  // namespace revsim

#endif  // REVSIM_ORACLE_HPP
