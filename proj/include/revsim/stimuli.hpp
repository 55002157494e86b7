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

#ifndef REVSIM_STIMULI_HPP
#define REVSIM_STIMULI_HPP

#include <optional>

#include <json.hpp>

#include "revsim/circuit.hpp"
#include "revsim/rng.hpp"

namespace revsim {

enum class TrialStatus { detected, exhausted };

/// Result of one random-stimuli equivalence run. trials_used is 1-based: the
/// detecting input counts. A witness is present exactly when detected.
struct TrialOutcome {
  TrialStatus status;
  long long trials_used;
  std::optional<BitString> witness;

  bool detected() const noexcept { return status == TrialStatus::detected; }

  nlohmann::ordered_json to_json() const;
};

/// min(2^width, 2^20): circuits are black boxes, so exhausting all inputs
/// proves equivalence, but the loop needs an operational cap.
long long default_max_trials(int width);

/// Draws uniform inputs one at a time and simulates both circuits until the
/// outputs differ or max_trials inputs are spent. Inputs are independent
/// draws with replacement.
TrialOutcome check_equivalence(const Circuit& golden, const Circuit& candidate,
                               RngStream& stream, long long max_trials);

/// Assumed single-error size and target failure probability.
struct ConfidenceSpec {
  int k;
  double delta;
};

/// Number of random inputs that witness a single size-k error with
/// probability at least 1 - delta: ceil(ln(1/delta) * 2^(k-1)). Natural log,
/// consistent with the exp(-N / 2^(k-1)) failure bound.
long long required_inputs(const ConfidenceSpec& spec);

struct FailureBounds {
  /// (1 - 2^-(k-1))^N: the failure probability against a worst-case size-k
  /// error; no other size-k error fails more often.
  double exact_worst_case;
  /// exp(-N / 2^(k-1)): the simpler, always-larger exponential form.
  double exp_bound;
};

FailureBounds failure_probability_bounds(int k, long long trials);

/// Expected trials to catch l independent worst-case size-k errors on
/// disjoint windows: 1 / (1 - (1 - 2^-(k-1))^l).
double best_case_expected_trials(int k, int l);

/// Expected trials for the anti-commuting two-bit-flip composition on n
/// lines: 2^(n-2), the reciprocal of its 4/2^n detection probability.
double worst_case_expected_trials(int n);

}  // namespace revsim

#endif  // REVSIM_STIMULI_HPP
