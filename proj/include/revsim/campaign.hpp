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

#ifndef REVSIM_CAMPAIGN_HPP
#define REVSIM_CAMPAIGN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revsim/circuit.hpp"
#include "revsim/errors.hpp"

namespace revsim {

enum class Experiment { single_error_scaling, multi_error, cdf_comparison };

std::string to_string(Experiment experiment);
Experiment experiment_from_string(const std::string& name);

/// Declarative description of one Monte-Carlo study: the full cross product
/// n_values x k_values x l_values, `repetitions` times each, driven entirely
/// by `master_seed`.
struct CampaignConfig {
  Experiment experiment = Experiment::single_error_scaling;
  std::vector<int> n_values;
  /// Gates per circuit; unset selects 10*n^2 per n.
  std::optional<long long> gate_count;
  std::vector<int> k_values;
  std::vector<int> l_values;
  ErrorKind error_kind = ErrorKind::worst_case;
  RandomErrorPolicy random_policy{};
  GatePolicy gate_policy{};
  long long repetitions = 10000;
  std::uint64_t master_seed = 0;
  /// Stimuli cap per check; unset selects min(2^n, 2^20) per n.
  std::optional<long long> max_trials;

  long long gates_for(int n) const {
    return gate_count ? *gate_count : 10ll * n * n;
  }
  long long max_trials_for(int n) const;

  void validate() const;

  nlohmann::ordered_json to_json() const;
  static CampaignConfig from_json(const nlohmann::json& doc);

  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

/// One repetition outcome. Exhausted repetitions keep trials_used = the cap
/// with detected = false.
struct ResultRow {
  int n;
  long long g;
  int k;
  int l;
  ErrorKind kind;
  long long repetition;
  long long trials_used;
  bool detected;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct ResultsTable {
  CampaignConfig config;
  std::string code_version;
  std::vector<ResultRow> rows;
};

/// Runs the campaign. Repetition r derives streams (master_seed, 3r) for the
/// circuit, (master_seed, 3r+1) for error sampling and (master_seed, 3r+2)
/// for stimuli, so switching the error model never perturbs the stimulus
/// sequence. Rows come out in canonical (n, k, l, repetition) order whatever
/// the thread count; threads = 0 picks the hardware concurrency.
ResultsTable run_campaign(const CampaignConfig& config, int threads = 0);

/// Per-group aggregation. Exhausted repetitions are excluded from the mean
/// and median (their count is reported) but stay in the cdf denominator, so
/// the cdf tail ends below 1 when some repetitions never detected.
struct GroupStats {
  int n;
  int k;
  int l;
  ErrorKind kind;
  long long samples;
  long long detected_count;
  long long excluded_count;
  std::optional<double> mean;
  std::optional<double> median;
  /// (trials, cumulative fraction of all samples detected within trials).
  std::vector<std::pair<long long, double>> cdf;
  double best_case_overlay;
};

struct SummaryStats {
  Experiment experiment;
  std::vector<GroupStats> groups;
};

SummaryStats summarize(const ResultsTable& table);

/// CSV columns: experiment,n,g,k,l,error_kind,repetition,trials_used,detected
/// (detected as 1/0, LF line endings, header mandatory). Returns bytes written.
std::size_t emit_csv(const ResultsTable& table, std::ostream& out);
std::size_t emit_json(const ResultsTable& table, std::ostream& out);
std::size_t emit_csv(const SummaryStats& stats, std::ostream& out);
std::size_t emit_json(const SummaryStats& stats, std::ostream& out);

/// Reads back a results CSV (the exact emit_csv dialect) for re-analysis.
/// Only row data is recovered; the config echo is reduced to the experiment.
ResultsTable parse_results_csv(std::istream& in);

}  // namespace revsim

#endif  // REVSIM_CAMPAIGN_HPP
