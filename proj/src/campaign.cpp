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

#include "revsim/campaign.hpp"

#include <algorithm>
#include <exception>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "revsim/exceptions.hpp"
#include "revsim/stimuli.hpp"
#include "revsim/version.hpp"

namespace revsim {

std::string to_string(Experiment experiment) {
  switch (experiment) {
    case Experiment::single_error_scaling: return "single_error_scaling";
    case Experiment::multi_error: return "multi_error";
    case Experiment::cdf_comparison: return "cdf_comparison";
  }
  throw std::invalid_argument("unreachable experiment value");
}

Experiment experiment_from_string(const std::string& name) {
  if (name == "single_error_scaling") return Experiment::single_error_scaling;
  if (name == "multi_error") return Experiment::multi_error;
  if (name == "cdf_comparison") return Experiment::cdf_comparison;
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

long long CampaignConfig::max_trials_for(int n) const {
  return max_trials ? *max_trials : default_max_trials(n);
}

void CampaignConfig::validate() const {
  if (n_values.empty() || k_values.empty() || l_values.empty()) {
    throw std::invalid_argument("n_values, k_values and l_values must be non-empty");
  }
  const int min_n = *std::min_element(n_values.begin(), n_values.end());
  for (int n : n_values) {
    if (n < 1 || n > kMaxWidth) {
      throw std::invalid_argument("n must be in [1, 64], got " + std::to_string(n));
    }
    if (gates_for(n) < 0) throw std::invalid_argument("gate_count must be >= 0");
    if (max_trials_for(n) < 1) throw std::invalid_argument("max_trials must be >= 1");
    gate_policy.validate(n);
  }
  for (int k : k_values) {
    if (k < 1 || k > min_n) {
      throw std::invalid_argument("k must satisfy 1 <= k <= min(n_values), got " +
                                  std::to_string(k));
    }
  }
  for (int l : l_values) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
  }
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
}

nlohmann::ordered_json CampaignConfig::to_json() const {
  nlohmann::ordered_json out;
  out["experiment"] = to_string(experiment);
  out["n_values"] = n_values;
  if (gate_count) out["gate_count"] = *gate_count;
  out["k_values"] = k_values;
  out["l_values"] = l_values;
  out["error_kind"] = to_string(error_kind);
  if (error_kind == ErrorKind::random) {
    out["random_error"] = {{"sequence_length", random_policy.sequence_length},
                           {"max_attempts", random_policy.max_attempts}};
  }
  out["gate_policy"] = {{"min_controls", gate_policy.min_controls},
                        {"max_controls", gate_policy.max_controls},
                        {"allow_negative", gate_policy.allow_negative}};
  out["repetitions"] = repetitions;
  out["master_seed"] = master_seed;
  if (max_trials) out["max_trials"] = *max_trials;
  return out;
}

CampaignConfig CampaignConfig::from_json(const nlohmann::json& doc) {
  static const char* known[] = {"experiment", "n_values",   "gate_count",
                                "k_values",   "l_values",   "error_kind",
                                "random_error", "gate_policy", "repetitions",
                                "master_seed", "max_trials"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (std::find_if(std::begin(known), std::end(known),
                     [&key](const char* name) { return key == name; }) ==
        std::end(known)) {
      throw std::invalid_argument("unknown campaign config field '" + key + "'");
    }
  }

  CampaignConfig config;
  config.experiment = experiment_from_string(doc.at("experiment").get<std::string>());
  config.n_values = doc.at("n_values").get<std::vector<int>>();
  if (doc.contains("gate_count")) config.gate_count = doc["gate_count"].get<long long>();
  config.k_values = doc.at("k_values").get<std::vector<int>>();
  config.l_values = doc.at("l_values").get<std::vector<int>>();
  if (doc.contains("error_kind")) {
    config.error_kind = error_kind_from_string(doc["error_kind"].get<std::string>());
  }
  if (doc.contains("random_error")) {
    const auto& re = doc["random_error"];
    if (re.contains("sequence_length")) {
      config.random_policy.sequence_length = re["sequence_length"].get<int>();
    }
    if (re.contains("max_attempts")) {
      config.random_policy.max_attempts = re["max_attempts"].get<int>();
    }
  }
  if (doc.contains("gate_policy")) {
    const auto& gp = doc["gate_policy"];
    if (gp.contains("min_controls")) {
      config.gate_policy.min_controls = gp["min_controls"].get<int>();
    }
    if (gp.contains("max_controls")) {
      config.gate_policy.max_controls = gp["max_controls"].get<int>();
    }
    if (gp.contains("allow_negative")) {
      config.gate_policy.allow_negative = gp["allow_negative"].get<bool>();
    }
  }
  if (doc.contains("repetitions")) config.repetitions = doc["repetitions"].get<long long>();
  config.master_seed = doc.at("master_seed").get<std::uint64_t>();
  if (doc.contains("max_trials")) config.max_trials = doc["max_trials"].get<long long>();
  config.validate();
  return config;
}

namespace {

void run_repetition_range(const CampaignConfig& config, long long rep_begin,
                          long long rep_end, std::vector<ResultRow>& rows) {
  for (long long rep = rep_begin; rep < rep_end; ++rep) {
    const auto seed = config.master_seed;
    for (std::size_t n_index = 0; n_index < config.n_values.size(); ++n_index) {
      const int n = config.n_values[n_index];
      const long long g = config.gates_for(n);
      RngStream circuit_stream = RngStream::derive(seed, 3 * static_cast<std::uint64_t>(rep));
      const Circuit ideal = random_circuit(n, g, circuit_stream, config.gate_policy);

      for (std::size_t k_index = 0; k_index < config.k_values.size(); ++k_index) {
        for (std::size_t l_index = 0; l_index < config.l_values.size(); ++l_index) {
          const int k = config.k_values[k_index];
          const int l = config.l_values[l_index];
          try {
            RngStream error_stream =
                RngStream::derive(seed, 3 * static_cast<std::uint64_t>(rep) + 1);
            const auto plan =
                random_injection_plan(g, n, l, k, error_stream, config.error_kind,
                                      config.random_policy);
            auto [corrupted, record] = inject(ideal, plan, error_stream);

            RngStream stimuli_stream =
                RngStream::derive(seed, 3 * static_cast<std::uint64_t>(rep) + 2);
            const TrialOutcome outcome = check_equivalence(
                ideal, corrupted, stimuli_stream, config.max_trials_for(n));

            const std::size_t index =
                ((n_index * config.k_values.size() + k_index) * config.l_values.size() +
                 l_index) *
                    static_cast<std::size_t>(config.repetitions) +
                static_cast<std::size_t>(rep);
            rows[index] = {n,  g, k, l, config.error_kind, rep,
                           outcome.trials_used, outcome.detected()};
          } catch (const SamplingError& e) {
            throw SamplingError("repetition " + std::to_string(rep) + " (n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) +
                                ", l=" + std::to_string(l) + "): " + e.what());
          }
        }
      }
    }
  }
}

}  // namespace

ResultsTable run_campaign(const CampaignConfig& config, int threads) {
  config.validate();
  const std::size_t total = config.n_values.size() * config.k_values.size() *
                            config.l_values.size() *
                            static_cast<std::size_t>(config.repetitions);
  std::vector<ResultRow> rows(total);

  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  threads = static_cast<int>(
      std::min<long long>(threads, config.repetitions));

  if (threads == 1) {
    run_repetition_range(config, 0, config.repetitions, rows);
  } else {
    const long long chunk = (config.repetitions + threads - 1) / threads;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      const long long begin = t * chunk;
      const long long end = std::min<long long>(begin + chunk, config.repetitions);
      if (begin >= end) break;
      workers.emplace_back([&, t, begin, end] {
        try {
          run_repetition_range(config, begin, end, rows);
        } catch (...) {
          failures[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  return {config, kVersion, std::move(rows)};
}

SummaryStats summarize(const ResultsTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("cannot summarize an empty table");

  // Group in row order; rows from run_campaign are already canonical.
  std::map<std::tuple<int, int, int, ErrorKind>, std::size_t> group_index;
  std::vector<GroupStats> groups;
  std::vector<std::vector<long long>> detected_trials;
  for (const ResultRow& row : table.rows) {
    const auto key = std::make_tuple(row.n, row.k, row.l, row.kind);
    auto [it, inserted] = group_index.try_emplace(key, groups.size());
    if (inserted) {
      groups.push_back({row.n, row.k, row.l, row.kind, 0, 0, 0, std::nullopt,
                        std::nullopt, {}, best_case_expected_trials(row.k, row.l)});
      detected_trials.emplace_back();
    }
    GroupStats& group = groups[it->second];
    group.samples += 1;
    if (row.detected) {
      group.detected_count += 1;
      detected_trials[it->second].push_back(row.trials_used);
    } else {
      group.excluded_count += 1;
    }
  }

  for (std::size_t i = 0; i < groups.size(); ++i) {
    GroupStats& group = groups[i];
    auto& trials = detected_trials[i];
    if (trials.empty()) continue;
    std::sort(trials.begin(), trials.end());

    long double sum = 0;
    for (long long value : trials) sum += static_cast<long double>(value);
    group.mean = static_cast<double>(sum / static_cast<long double>(trials.size()));

    const std::size_t mid = trials.size() / 2;
    group.median = trials.size() % 2 == 1
                       ? static_cast<double>(trials[mid])
                       : (static_cast<double>(trials[mid - 1]) +
                          static_cast<double>(trials[mid])) /
                             2.0;

    const auto denom = static_cast<double>(group.samples);
    std::size_t seen = 0;
    for (std::size_t j = 0; j < trials.size();) {
      std::size_t next = j;
      while (next < trials.size() && trials[next] == trials[j]) ++next;
      seen += next - j;
      group.cdf.emplace_back(trials[j], static_cast<double>(seen) / denom);
      j = next;
    }
  }

  return {table.config.experiment, std::move(groups)};
}

namespace {

std::size_t write_all(std::ostream& out, const std::string& data) {
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("failed to write output");
  return data.size();
}

}  // namespace

std::size_t emit_csv(const ResultsTable& table, std::ostream& out) {
  std::string buffer = "experiment,n,g,k,l,error_kind,repetition,trials_used,detected\n";
  const std::string experiment = to_string(table.config.experiment);
  for (const ResultRow& row : table.rows) {
    buffer += experiment;
    buffer += ',';
    buffer += std::to_string(row.n);
    buffer += ',';
    buffer += std::to_string(row.g);
    buffer += ',';
    buffer += std::to_string(row.k);
    buffer += ',';
    buffer += std::to_string(row.l);
    buffer += ',';
    buffer += to_string(row.kind);
    buffer += ',';
    buffer += std::to_string(row.repetition);
    buffer += ',';
    buffer += std::to_string(row.trials_used);
    buffer += ',';
    buffer += row.detected ? '1' : '0';
    buffer += '\n';
  }
  return write_all(out, buffer);
}

std::size_t emit_json(const ResultsTable& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = "revsim-results/1";
  doc["version"] = table.code_version;
  doc["config"] = table.config.to_json();
  auto rows = nlohmann::ordered_json::array();
  for (const ResultRow& row : table.rows) {
    rows.push_back({{"n", row.n},
                    {"g", row.g},
                    {"k", row.k},
                    {"l", row.l},
                    {"error_kind", to_string(row.kind)},
                    {"repetition", row.repetition},
                    {"trials_used", row.trials_used},
                    {"detected", row.detected}});
  }
  doc["rows"] = std::move(rows);
  return write_all(out, doc.dump(2) + "\n");
}

std::size_t emit_csv(const SummaryStats& stats, std::ostream& out) {
  std::string buffer =
      "experiment,n,k,l,error_kind,samples,detected,excluded,mean_trials,"
      "median_trials,best_case_expected\n";
  const std::string experiment = to_string(stats.experiment);
  std::ostringstream fmt;
  fmt.precision(17);
  for (const GroupStats& group : stats.groups) {
    fmt.str("");
    fmt << experiment << ',' << group.n << ',' << group.k << ',' << group.l << ','
        << to_string(group.kind) << ',' << group.samples << ',' << group.detected_count
        << ',' << group.excluded_count << ',';
    if (group.mean) fmt << *group.mean;
    fmt << ',';
    if (group.median) fmt << *group.median;
    fmt << ',' << group.best_case_overlay << '\n';
    buffer += fmt.str();
  }
  return write_all(out, buffer);
}

std::size_t emit_json(const SummaryStats& stats, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = "revsim-summary/1";
  doc["experiment"] = to_string(stats.experiment);
  auto groups = nlohmann::ordered_json::array();
  for (const GroupStats& group : stats.groups) {
    nlohmann::ordered_json item;
    item["n"] = group.n;
    item["k"] = group.k;
    item["l"] = group.l;
    item["error_kind"] = to_string(group.kind);
    item["samples"] = group.samples;
    item["detected"] = group.detected_count;
    item["excluded"] = group.excluded_count;
    item["mean_trials"] = group.mean ? nlohmann::ordered_json(*group.mean)
                                     : nlohmann::ordered_json(nullptr);
    item["median_trials"] = group.median ? nlohmann::ordered_json(*group.median)
                                         : nlohmann::ordered_json(nullptr);
    item["best_case_expected"] = group.best_case_overlay;
    auto cdf = nlohmann::ordered_json::array();
    for (const auto& [trials, fraction] : group.cdf) {
      cdf.push_back({{"trials", trials}, {"cumulative", fraction}});
    }
    item["cdf"] = std::move(cdf);
    groups.push_back(std::move(item));
  }
  doc["groups"] = std::move(groups);
  return write_all(out, doc.dump(2) + "\n");
}

ResultsTable parse_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "experiment,n,g,k,l,error_kind,repetition,trials_used,detected") {
    throw ParseError("unexpected results CSV header", 1);
  }
  ResultsTable table;
  table.code_version = kVersion;
  int line_no = 1;
  bool experiment_set = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 9) {
      throw ParseError("expected 9 CSV fields, got " + std::to_string(fields.size()),
                       line_no);
    }
    try {
      if (!experiment_set) {
        table.config.experiment = experiment_from_string(fields[0]);
        experiment_set = true;
      }
      table.rows.push_back({std::stoi(fields[1]), std::stoll(fields[2]),
                            std::stoi(fields[3]), std::stoi(fields[4]),
                            error_kind_from_string(fields[5]), std::stoll(fields[6]),
                            std::stoll(fields[7]), fields[8] == "1"});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return table;
}

}  // namespace revsim
