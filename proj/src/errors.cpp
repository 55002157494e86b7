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

#include "revsim/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "revsim/exceptions.hpp"

namespace revsim {

namespace {

constexpr int kMaxSupportWidth = 16;

void check_window(int width, int k, int window_start) {
  if (width < 1 || width > kMaxWidth) {
    throw std::invalid_argument("width must be in [1, 64]");
  }
  if (k < 1 || k > width) {
    throw std::invalid_argument("error size k must be in [1, width]");
  }
  if (window_start < 0 || window_start + k > width) {
    throw std::invalid_argument("window [" + std::to_string(window_start) + ", " +
                                std::to_string(window_start + k) +
                                ") does not fit in " + std::to_string(width) +
                                " lines");
  }
}

/// Re-homes a k-line circuit onto lines [offset, offset+k) of a width-n circuit.
Circuit embed(const Circuit& sub, int width, int offset) {
  std::vector<Gate> gates;
  gates.reserve(sub.gate_count());
  for (const Gate& gate : sub.gates()) {
    gates.push_back(Gate::from_masks(gate.target() + offset,
                                     gate.positive_mask() << offset,
                                     gate.negative_mask() << offset));
  }
  return Circuit(width, std::move(gates));
}

nlohmann::ordered_json gate_to_json(const Gate& gate) {
  nlohmann::ordered_json out;
  out["target"] = gate.target();
  auto positive = nlohmann::ordered_json::array();
  auto negative = nlohmann::ordered_json::array();
  for (const Control& c : gate.controls()) {
    (c.polarity == Polarity::positive ? positive : negative).push_back(c.line);
  }
  out["positive"] = std::move(positive);
  out["negative"] = std::move(negative);
  return out;
}

Gate gate_from_json(const nlohmann::json& doc) {
  std::vector<Control> controls;
  for (const auto& line : doc.at("positive")) {
    controls.push_back({line.get<int>(), Polarity::positive});
  }
  for (const auto& line : doc.at("negative")) {
    controls.push_back({line.get<int>(), Polarity::negative});
  }
  return Gate(doc.at("target").get<int>(), controls);
}

}  // namespace

std::string to_string(ErrorKind kind) {
  return kind == ErrorKind::worst_case ? "worst_case" : "random";
}

ErrorKind error_kind_from_string(const std::string& name) {
  if (name == "worst_case") return ErrorKind::worst_case;
  if (name == "random") return ErrorKind::random;
  throw std::invalid_argument("unknown error kind '" + name + "'");
}

Circuit worst_case_error(int width, int k, int window_start) {
  check_window(width, k, window_start);
  std::vector<Control> controls;
  controls.reserve(static_cast<std::size_t>(k - 1));
  for (int line = window_start; line < window_start + k - 1; ++line) {
    controls.push_back({line, Polarity::positive});
  }
  return Circuit(width, {Gate(window_start + k - 1, controls)});
}

Circuit random_error(int width, int k, int window_start, RngStream& stream,
                     const RandomErrorPolicy& policy) {
  check_window(width, k, window_start);
  if (k > kMaxSupportWidth) {
    throw CapacityError("random_error needs support analysis, capped at k = 16");
  }
  if (policy.max_attempts < 1) {
    throw std::invalid_argument("max_attempts must be >= 1");
  }
  const int length = policy.resolved_sequence_length(k);
  const Window window{0, k};
  for (int attempt = 0; attempt < policy.max_attempts; ++attempt) {
    Circuit candidate = random_circuit(k, length, stream);
    if (static_cast<int>(support(candidate, window).size()) == k) {
      return embed(candidate, width, window_start);
    }
  }
  throw SamplingError("no size-" + std::to_string(k) + " error found in " +
                      std::to_string(policy.max_attempts) + " attempts (" +
                      std::to_string(length) + " gates per attempt)");
}

std::vector<int> support(const Circuit& error, Window window) {
  check_window(error.width(), window.k, window.start);
  if (window.k > kMaxSupportWidth) {
    throw CapacityError("support analysis is capped at window size 16, got " +
                        std::to_string(window.k));
  }
  const std::uint64_t window_mask = width_mask(window.k) << window.start;
  for (const Gate& gate : error.gates()) {
    const std::uint64_t lines = gate.positive_mask() | gate.negative_mask() |
                                (std::uint64_t{1} << gate.target());
    if (lines & ~window_mask) {
      throw std::invalid_argument("error circuit leaves its declared window");
    }
  }

  const std::uint32_t size = std::uint32_t{1} << window.k;
  std::vector<std::uint32_t> image(size);
  for (std::uint32_t pattern = 0; pattern < size; ++pattern) {
    const std::uint64_t out = simulate_raw(error, std::uint64_t{pattern} << window.start);
    image[pattern] = static_cast<std::uint32_t>(out >> window.start);
  }

  std::vector<int> lines;
  for (int j = 0; j < window.k; ++j) {
    const std::uint32_t bit = std::uint32_t{1} << j;
    bool touched = false;
    for (std::uint32_t pattern = 0; pattern < size && !touched; ++pattern) {
      touched = ((image[pattern] ^ pattern) & bit) != 0 ||
                image[pattern ^ bit] != (image[pattern] ^ bit);
    }
    if (touched) lines.push_back(window.start + j);
  }
  return lines;
}

std::vector<Injection> random_injection_plan(long long gate_count, int width, int l,
                                             int k, RngStream& stream, ErrorKind kind,
                                             const RandomErrorPolicy& policy) {
  if (gate_count < 0) throw std::invalid_argument("gate count must be >= 0");
  if (l < 1) throw std::invalid_argument("error count l must be >= 1");
  check_window(width, k, 0);
  std::vector<Injection> plan;
  plan.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    const auto position = static_cast<long long>(
        stream.uniform_below(static_cast<std::uint64_t>(gate_count) + 1));
    const auto start = static_cast<int>(
        stream.uniform_below(static_cast<std::uint64_t>(width - k) + 1));
    plan.push_back({position, ErrorSpec{k, start, kind, policy}});
  }
  return plan;
}

std::string circuit_digest(const Circuit& circuit) {
  // FNV-1a over width and per-gate (target, positive, negative) words.
  std::uint64_t hash = 0xCBF29CE484222325ull;
  const auto feed = [&hash](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (word >> (8 * byte)) & 0xFF;
      hash *= 0x100000001B3ull;
    }
  };
  feed(static_cast<std::uint64_t>(circuit.width()));
  for (const Gate& gate : circuit.gates()) {
    feed(static_cast<std::uint64_t>(gate.target()));
    feed(gate.positive_mask());
    feed(gate.negative_mask());
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

nlohmann::ordered_json InjectionRecord::to_json() const {
  nlohmann::ordered_json out;
  out["schema"] = "revsim-injection-record/1";
  out["source"] = {{"width", source.width},
                   {"gate_count", source.gate_count},
                   {"digest", source.digest}};
  auto list = nlohmann::ordered_json::array();
  for (const Entry& entry : entries) {
    nlohmann::ordered_json item;
    item["position"] = entry.position;
    item["window_start"] = entry.window.start;
    item["k"] = entry.window.k;
    item["kind"] = to_string(entry.kind);
    auto gates = nlohmann::ordered_json::array();
    for (const Gate& gate : entry.error.gates()) gates.push_back(gate_to_json(gate));
    item["gates"] = std::move(gates);
    list.push_back(std::move(item));
  }
  out["injections"] = std::move(list);
  return out;
}

InjectionRecord InjectionRecord::from_json(const nlohmann::json& doc) {
  if (doc.at("schema").get<std::string>() != "revsim-injection-record/1") {
    throw std::invalid_argument("unsupported injection record schema");
  }
  const auto& source = doc.at("source");
  InjectionRecord record;
  record.source = {source.at("width").get<int>(),
                   source.at("gate_count").get<long long>(),
                   source.at("digest").get<std::string>()};
  for (const auto& item : doc.at("injections")) {
    std::vector<Gate> gates;
    for (const auto& gate : item.at("gates")) gates.push_back(gate_from_json(gate));
    record.entries.push_back(
        {item.at("position").get<long long>(),
         Window{item.at("window_start").get<int>(), item.at("k").get<int>()},
         error_kind_from_string(item.at("kind").get<std::string>()),
         Circuit(record.source.width, std::move(gates))});
  }
  return record;
}

std::pair<Circuit, InjectionRecord> inject(const Circuit& circuit,
                                           std::span<const Injection> injections,
                                           RngStream& stream) {
  const auto gate_count = static_cast<long long>(circuit.gate_count());
  for (const Injection& injection : injections) {
    if (injection.position < 0 || injection.position > gate_count) {
      throw std::invalid_argument("injection position " +
                                  std::to_string(injection.position) +
                                  " outside gaps [0, " + std::to_string(gate_count) + "]");
    }
    check_window(circuit.width(), injection.spec.k, injection.spec.window_start);
  }

  std::vector<Injection> ordered(injections.begin(), injections.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Injection& a, const Injection& b) {
                     return a.position < b.position;
                   });

  InjectionRecord record;
  record.source = {circuit.width(), gate_count, circuit_digest(circuit)};
  for (const Injection& injection : ordered) {
    const ErrorSpec& spec = injection.spec;
    Circuit error = spec.kind == ErrorKind::worst_case
                        ? worst_case_error(circuit.width(), spec.k, spec.window_start)
                        : random_error(circuit.width(), spec.k, spec.window_start,
                                       stream, spec.random_policy);
    record.entries.push_back(
        {injection.position, spec.window(), spec.kind, std::move(error)});
  }
  return {apply_record(circuit, record), record};
}

Circuit apply_record(const Circuit& ideal, const InjectionRecord& record) {
  if (ideal.width() != record.source.width ||
      static_cast<long long>(ideal.gate_count()) != record.source.gate_count ||
      circuit_digest(ideal) != record.source.digest) {
    throw std::invalid_argument("record does not describe this ideal circuit");
  }
  std::vector<Gate> gates;
  std::size_t extra = 0;
  for (const auto& entry : record.entries) extra += entry.error.gate_count();
  gates.reserve(ideal.gate_count() + extra);

  std::size_t next = 0;
  for (long long gap = 0; gap <= record.source.gate_count; ++gap) {
    while (next < record.entries.size() && record.entries[next].position == gap) {
      const auto error_gates = record.entries[next].error.gates();
      gates.insert(gates.end(), error_gates.begin(), error_gates.end());
      ++next;
    }
    if (gap < record.source.gate_count) {
      gates.push_back(ideal.gates()[static_cast<std::size_t>(gap)]);
    }
  }
  return Circuit(ideal.width(), std::move(gates));
}

Circuit strip_record(const Circuit& corrupted, const InjectionRecord& record) {
  std::vector<Gate> gates(corrupted.gates().begin(), corrupted.gates().end());
  // Walk the record backwards so earlier offsets stay valid while erasing.
  std::vector<long long> offsets(record.entries.size());
  long long shift = 0;
  for (std::size_t i = 0; i < record.entries.size(); ++i) {
    offsets[i] = record.entries[i].position + shift;
    shift += static_cast<long long>(record.entries[i].error.gate_count());
  }
  for (std::size_t i = record.entries.size(); i-- > 0;) {
    const auto begin = static_cast<std::ptrdiff_t>(offsets[i]);
    const auto count =
        static_cast<std::ptrdiff_t>(record.entries[i].error.gate_count());
    if (begin + count > static_cast<std::ptrdiff_t>(gates.size())) {
      throw std::invalid_argument("record does not match the corrupted circuit");
    }
    gates.erase(gates.begin() + begin, gates.begin() + begin + count);
  }
  Circuit ideal(corrupted.width(), std::move(gates));
  if (circuit_digest(ideal) != record.source.digest) {
    throw std::invalid_argument("stripping the record did not restore the source circuit");
  }
  return ideal;
}

}  // namespace revsim
