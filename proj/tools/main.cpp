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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revsim/campaign.hpp"
#include "revsim/circuit.hpp"
#include "revsim/errors.hpp"
#include "revsim/exceptions.hpp"
#include "revsim/oracle.hpp"
#include "revsim/realfmt.hpp"
#include "revsim/rng.hpp"
#include "revsim/stimuli.hpp"
#include "revsim/version.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes are stable API: 0 success (or equivalent), 1 non-equivalence
// detected, 2 usage error, 3 runtime error.
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw revsim::IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw revsim::IoError("failed to read '" + path + "'");
  return buffer.str();
}

std::size_t write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw revsim::IoError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw revsim::IoError("failed to write '" + path + "'");
  return bytes.size();
}

revsim::RealDocument load_circuit_file(const std::string& path) {
  return revsim::parse_real(read_file(path));
}

revsim::ErrorKind parse_kind(const std::string& name) {
  if (name == "worst" || name == "worst_case") return revsim::ErrorKind::worst_case;
  if (name == "random") return revsim::ErrorKind::random;
  throw CLI::ValidationError("--kind", "expected 'worst' or 'random', got '" + name + "'");
}

void print_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

struct GenArgs {
  int lines = 0;
  std::optional<long long> gates;
  std::uint64_t seed = 0;
  std::string output;
  revsim::GatePolicy policy;
  bool json = false;
};

int run_gen(const GenArgs& args) {
  const long long gates = args.gates ? *args.gates : 10ll * args.lines * args.lines;
  revsim::RngStream stream = revsim::RngStream::derive(args.seed, 0);
  const revsim::Circuit circuit =
      revsim::random_circuit(args.lines, gates, stream, args.policy);
  const std::size_t bytes = write_file(args.output, revsim::write_real(circuit));
  if (args.json) {
    print_json({{"schema", "revsim-gen/1"},
                {"file", args.output},
                {"lines", args.lines},
                {"gates", gates},
                {"seed", args.seed},
                {"bytes", bytes}});
  }
  return 0;
}

struct CheckArgs {
  std::string golden;
  std::string candidate;
  std::uint64_t seed = 0;
  std::optional<long long> max_trials;
  bool json = false;
};

int run_check(const CheckArgs& args) {
  const revsim::Circuit golden = load_circuit_file(args.golden).to_circuit();
  const revsim::Circuit candidate = load_circuit_file(args.candidate).to_circuit();
  const long long budget =
      args.max_trials ? *args.max_trials : revsim::default_max_trials(golden.width());
  revsim::RngStream stream = revsim::RngStream::derive(args.seed, 0);
  const revsim::TrialOutcome outcome =
      revsim::check_equivalence(golden, candidate, stream, budget);
  if (args.json) {
    ordered_json doc = outcome.to_json();
    doc["schema"] = "revsim-trial-outcome/1";
    doc["max_trials"] = budget;
    print_json(doc);
  } else if (outcome.detected()) {
    std::cout << "detected after " << outcome.trials_used << " trials\n"
              << "witness: " << outcome.witness->to_binary() << "\n";
  } else {
    std::cout << "exhausted after " << outcome.trials_used << " trials\n";
  }
  return outcome.detected() ? 1 : 0;
}

struct InjectArgs {
  std::string circuit;
  std::string output;
  std::string record_path;
  std::string from_record;
  std::optional<int> k;
  std::string kind = "worst";
  int count = 1;
  std::optional<std::uint64_t> seed;
  int sequence_length = 0;
  int max_attempts = 1000;
  bool json = false;
};

int run_inject(const InjectArgs& args) {
  const revsim::RealDocument doc = load_circuit_file(args.circuit);
  const revsim::Circuit ideal = doc.to_circuit();

  revsim::Circuit corrupted = ideal;
  std::optional<revsim::InjectionRecord> record;
  if (!args.from_record.empty()) {
    record = revsim::InjectionRecord::from_json(
        nlohmann::json::parse(read_file(args.from_record)));
    corrupted = revsim::apply_record(ideal, *record);
  } else if (args.count > 0) {
    if (!args.k || !args.seed) {
      throw CLI::RequiredError("inject needs --k and --seed (or --from-record)");
    }
    const revsim::ErrorKind kind = parse_kind(args.kind);
    const revsim::RandomErrorPolicy policy{args.sequence_length, args.max_attempts};
    revsim::RngStream stream = revsim::RngStream::derive(*args.seed, 0);
    const auto plan =
        revsim::random_injection_plan(static_cast<long long>(ideal.gate_count()),
                                      ideal.width(), args.count, *args.k, stream,
                                      kind, policy);
    auto [result, rec] = revsim::inject(ideal, plan, stream);
    corrupted = std::move(result);
    record = std::move(rec);
  }

  const std::size_t bytes = write_file(args.output, revsim::write_real(corrupted, doc.variables));
  if (!args.record_path.empty()) {
    if (!record) {
      // --count 0 still records the (empty) injection set for reproducibility.
      record = revsim::InjectionRecord{
          {ideal.width(), static_cast<long long>(ideal.gate_count()),
           revsim::circuit_digest(ideal)},
          {}};
    }
    write_file(args.record_path, record->to_json().dump(2) + "\n");
  }
  if (args.json) {
    print_json({{"schema", "revsim-inject/1"},
                {"file", args.output},
                {"record", args.record_path.empty() ? ordered_json(nullptr)
                                                    : ordered_json(args.record_path)},
                {"injected", record ? record->entries.size() : 0},
                {"bytes", bytes}});
  }
  return 0;
}

struct OracleArgs {
  std::string golden;
  std::string candidate;
  bool json = false;
};

int run_oracle(const OracleArgs& args) {
  const revsim::Circuit golden = load_circuit_file(args.golden).to_circuit();
  const revsim::Circuit candidate = load_circuit_file(args.candidate).to_circuit();
  const revsim::ExactProbability probability =
      revsim::exact_detection_probability(golden, candidate);
  if (args.json) {
    print_json({{"schema", "revsim-probability/1"},
                {"numerator", probability.numerator},
                {"denominator", probability.denominator},
                {"value", probability.value()}});
  } else {
    std::cout << probability.numerator << " / " << probability.denominator << "\n";
  }
  return 0;
}

struct BoundArgs {
  int k = 0;
  double delta = 0;
  bool json = false;
};

int run_bound(const BoundArgs& args) {
  const long long inputs = revsim::required_inputs({args.k, args.delta});
  if (args.json) {
    const auto bounds = revsim::failure_probability_bounds(args.k, inputs);
    print_json({{"schema", "revsim-bound/1"},
                {"k", args.k},
                {"delta", args.delta},
                {"required_inputs", inputs},
                {"exact_worst_case", bounds.exact_worst_case},
                {"exp_bound", bounds.exp_bound}});
  } else {
    std::cout << inputs << "\n";
  }
  return 0;
}

struct CampaignArgs {
  std::string config;
  std::string output;
  std::string format = "csv";
  std::string summary;
  int threads = 0;
  bool json = false;
};

int run_campaign_cmd(const CampaignArgs& args) {
  const auto config =
      revsim::CampaignConfig::from_json(nlohmann::json::parse(read_file(args.config)));
  const revsim::ResultsTable table = revsim::run_campaign(config, args.threads);

  std::ostringstream buffer;
  const std::size_t bytes = args.format == "json" ? revsim::emit_json(table, buffer)
                                                  : revsim::emit_csv(table, buffer);
  write_file(args.output, buffer.str());

  if (!args.summary.empty()) {
    std::ostringstream summary;
    revsim::emit_json(revsim::summarize(table), summary);
    write_file(args.summary, summary.str());
  }
  if (args.json) {
    print_json({{"schema", "revsim-campaign-run/1"},
                {"file", args.output},
                {"format", args.format},
                {"rows", table.rows.size()},
                {"bytes", bytes},
                {"summary", args.summary.empty() ? ordered_json(nullptr)
                                                 : ordered_json(args.summary)}});
  }
  return 0;
}

struct DemoMaskingArgs {
  int flip_layer = 1;
  int flip_index = 1;
  bool json = false;
};

int run_demo_masking(const DemoMaskingArgs& args) {
  const revsim::CascadeCount count =
      revsim::and_cascade_demo(revsim::FlipWire{args.flip_layer, args.flip_index});
  if (args.json) {
    print_json({{"schema", "revsim-demo-masking/1"},
                {"flip_layer", args.flip_layer},
                {"flip_index", args.flip_index},
                {"detecting_inputs", count.detecting_inputs},
                {"total", count.total}});
  } else {
    std::cout << count.detecting_inputs << " / " << count.total << "\n";
  }
  return 0;
}

struct DemoWorstcaseArgs {
  int lines = 0;
  bool json = false;
};

int run_demo_worstcase(const DemoWorstcaseArgs& args) {
  const auto composition = revsim::worst_case_composition(args.lines);
  const auto probability =
      revsim::exact_detection_probability(composition.ideal, composition.corrupted);
  const auto lines = revsim::support(composition.effective_error,
                                     revsim::Window{1, args.lines - 1});
  if (args.json) {
    print_json({{"schema", "revsim-demo-worstcase/1"},
                {"lines", args.lines},
                {"detecting_inputs", probability.numerator},
                {"total", probability.denominator},
                {"support", lines},
                {"expected_trials", revsim::worst_case_expected_trials(args.lines)}});
  } else {
    std::cout << probability.numerator << " / " << probability.denominator << "\n";
    std::cout << "effective error support:";
    for (int line : lines) std::cout << ' ' << line;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible-circuit simulation and error-detection toolkit"};
  app.set_version_flag("--version", revsim::kVersion);
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random reversible circuit");
  gen->add_option("--lines", gen_args.lines, "number of lines n")
      ->required()
      ->check(CLI::Range(1, 64));
  long long gen_gates = -1;
  gen->add_option("--gates", gen_gates, "gate count (default 10*n^2)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_args.seed, "master seed")->required();
  gen->add_option("-o,--output", gen_args.output, "output .real file")->required();
  gen->add_option("--min-controls", gen_args.policy.min_controls,
                  "minimum controls per gate");
  gen->add_option("--max-controls", gen_args.policy.max_controls,
                  "maximum controls per gate (default min(4, n-1))");
  gen->add_flag("--negative-controls", gen_args.policy.allow_negative,
                "draw control polarities at random");
  gen->add_flag("--json", gen_args.json, "print a JSON run manifest");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "random-stimuli equivalence check");
  check->add_option("--golden", check_args.golden, "golden .real file")->required();
  check->add_option("--candidate", check_args.candidate, "candidate .real file")
      ->required();
  check->add_option("--seed", check_args.seed, "stimuli seed")->required();
  long long check_trials = -1;
  check->add_option("--max-trials", check_trials,
                    "trial budget (default min(2^n, 2^20))")
      ->check(CLI::PositiveNumber);
  check->add_flag("--json", check_args.json, "print the outcome as JSON");

  InjectArgs inject_args;
  auto* inject = app.add_subcommand("inject", "splice errors into a circuit");
  inject->add_option("--circuit", inject_args.circuit, "ideal .real file")->required();
  inject->add_option("-o,--output", inject_args.output, "corrupted .real file")
      ->required();
  inject->add_option("--record", inject_args.record_path, "write the injection record");
  int inject_k = -1;
  auto* k_option = inject->add_option("--k", inject_k, "error size (lines affected)")
                       ->check(CLI::PositiveNumber);
  inject->add_option("--kind", inject_args.kind, "worst|random (default worst)");
  inject->add_option("--count", inject_args.count, "number of errors (default 1)")
      ->check(CLI::NonNegativeNumber);
  std::uint64_t inject_seed = 0;
  auto* seed_option = inject->add_option("--seed", inject_seed, "injection seed");
  inject->add_option("--seq-len", inject_args.sequence_length,
                     "random error gates per attempt (default 3k)");
  inject->add_option("--max-attempts", inject_args.max_attempts,
                     "random error rejection budget");
  auto* from_record = inject->add_option("--from-record", inject_args.from_record,
                                         "re-apply a saved injection record");
  from_record->excludes(k_option)->excludes(seed_option);
  inject->add_flag("--json", inject_args.json, "print a JSON run manifest");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "exact detection probability (n <= 20)");
  oracle->add_option("--golden", oracle_args.golden, "golden .real file")->required();
  oracle->add_option("--candidate", oracle_args.candidate, "candidate .real file")
      ->required();
  oracle->add_flag("--json", oracle_args.json, "print the fraction as JSON");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "trial count for a confidence target");
  bound->add_option("--k", bound_args.k, "assumed error size")
      ->required()
      ->check(CLI::PositiveNumber);
  bound->add_option("--delta", bound_args.delta, "failure probability in (0,1)")
      ->required();
  bound->add_flag("--json", bound_args.json, "print the bound as JSON");

  CampaignArgs campaign_args;
  auto* campaign = app.add_subcommand("campaign", "run a seeded experiment campaign");
  campaign->add_option("--config", campaign_args.config, "campaign JSON config")
      ->required();
  campaign->add_option("-o,--output", campaign_args.output, "results file")->required();
  campaign->add_option("--format", campaign_args.format, "csv|json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  campaign->add_option("--summary", campaign_args.summary,
                       "also write summary statistics JSON");
  campaign->add_option("--threads", campaign_args.threads,
                       "worker threads (default: hardware)");
  campaign->add_flag("--json", campaign_args.json, "print a JSON run manifest");

  auto* demo = app.add_subcommand("demo", "built-in showcases");
  demo->require_subcommand(1);
  DemoMaskingArgs masking_args;
  auto* masking = demo->add_subcommand(
      "masking", "irreversible AND cascade hiding a bit flip (4 / 256)");
  masking->add_option("--flip-layer", masking_args.flip_layer, "wire layer (0-3)");
  masking->add_option("--flip-index", masking_args.flip_index, "wire index in layer");
  masking->add_flag("--json", masking_args.json, "print counts as JSON");

  DemoWorstcaseArgs worstcase_args;
  auto* worstcase = demo->add_subcommand(
      "worstcase", "two bit flips composing into a size n-1 error");
  worstcase->add_option("--lines", worstcase_args.lines, "number of lines n")
      ->required()
      ->check(CLI::Range(2, 20));
  worstcase->add_flag("--json", worstcase_args.json, "print counts as JSON");

  try {
    app.parse(argc, argv);
    if (*gen) {
      if (gen_gates >= 0) gen_args.gates = gen_gates;
      return run_gen(gen_args);
    }
    if (*check) {
      if (check_trials > 0) check_args.max_trials = check_trials;
      return run_check(check_args);
    }
    if (*inject) {
      if (inject_k > 0) inject_args.k = inject_k;
      if (seed_option->count() > 0) inject_args.seed = inject_seed;
      return run_inject(inject_args);
    }
    if (*oracle) return run_oracle(oracle_args);
    if (*bound) return run_bound(bound_args);
    if (*campaign) return run_campaign_cmd(campaign_args);
    if (*masking) return run_demo_masking(masking_args);
    if (*worstcase) return run_demo_worstcase(worstcase_args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const revsim::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const revsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
