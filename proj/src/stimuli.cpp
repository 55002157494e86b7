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

#include "revsim/stimuli.hpp"

#include <cmath>
#include <stdexcept>

namespace revsim {

nlohmann::ordered_json TrialOutcome::to_json() const {
  nlohmann::ordered_json out;
  out["status"] = detected() ? "detected" : "exhausted";
  out["trials_used"] = trials_used;
  if (witness) out["witness"] = witness->to_binary();
  return out;
}

long long default_max_trials(int width) {
  constexpr long long kCap = 1ll << 20;
  return width >= 20 ? kCap : (1ll << width);
}

TrialOutcome check_equivalence(const Circuit& golden, const Circuit& candidate,
                               RngStream& stream, long long max_trials) {
  if (golden.width() != candidate.width()) {
    throw std::invalid_argument("circuits have different widths (" +
                                std::to_string(golden.width()) + " vs " +
                                std::to_string(candidate.width()) + ")");
  }
  if (max_trials < 1) {
    throw std::invalid_argument("max_trials must be >= 1");
  }
  const int width = golden.width();
  const std::uint64_t mask = width_mask(width);
  for (long long trial = 1; trial <= max_trials; ++trial) {
    const std::uint64_t x = stream.next_u64() & mask;
    if (simulate_raw(golden, x) != simulate_raw(candidate, x)) {
      return {TrialStatus::detected, trial, BitString(width, x)};
    }
  }
  return {TrialStatus::exhausted, max_trials, std::nullopt};
}

long long required_inputs(const ConfidenceSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("error size k must be >= 1");
  if (!(spec.delta > 0.0 && spec.delta < 1.0)) {
    throw std::invalid_argument("delta must lie strictly between 0 and 1");
  }
  const double trials = std::log(1.0 / spec.delta) * std::ldexp(1.0, spec.k - 1);
  return static_cast<long long>(std::ceil(trials));
}

FailureBounds failure_probability_bounds(int k, long long trials) {
  if (k < 1) throw std::invalid_argument("error size k must be >= 1");
  if (trials < 0) throw std::invalid_argument("trial count must be >= 0");
  const double p = std::ldexp(1.0, -(k - 1));
  const double n = static_cast<double>(trials);
  return {std::pow(1.0 - p, n), std::exp(-n * p)};
}

double best_case_expected_trials(int k, int l) {
  if (k < 1) throw std::invalid_argument("error size k must be >= 1");
  if (l < 1) throw std::invalid_argument("error count l must be >= 1");
  const double miss = std::pow(1.0 - std::ldexp(1.0, -(k - 1)), static_cast<double>(l));
  return 1.0 / (1.0 - miss);
}

double worst_case_expected_trials(int n) {
  if (n < 2) throw std::invalid_argument("the composition needs n >= 2 lines");
  return std::ldexp(1.0, n - 2);
}

}  // namespace revsim
