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

#ifndef REVSIM_ERRORS_HPP
#define REVSIM_ERRORS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "revsim/circuit.hpp"
#include "revsim/rng.hpp"

namespace revsim {

/// A contiguous block of k lines starting at `start`. Error circuits are
/// geometrically local: their support lives inside one window.
struct Window {
  int start;
  int k;

  friend bool operator==(const Window&, const Window&) = default;
};

enum class ErrorKind { worst_case, random };

std::string to_string(ErrorKind kind);
ErrorKind error_kind_from_string(const std::string& name);

/// Knobs for rejection-sampled random errors.
struct RandomErrorPolicy {
  /// Gates per attempt; 0 selects the default of 3k.
  int sequence_length = 0;
  int max_attempts = 1000;

  int resolved_sequence_length(int k) const {
    return sequence_length > 0 ? sequence_length : 3 * k;
  }

  friend bool operator==(const RandomErrorPolicy&, const RandomErrorPolicy&) = default;
};

/// What to inject: an error of size k on the window starting at window_start.
struct ErrorSpec {
  int k;
  int window_start;
  ErrorKind kind = ErrorKind::worst_case;
  RandomErrorPolicy random_policy{};

  Window window() const { return {window_start, k}; }

  friend bool operator==(const ErrorSpec&, const ErrorSpec&) = default;
};

/// An ErrorSpec bound to a gate-gap position (0..g) of the target circuit.
struct Injection {
  long long position;
  ErrorSpec spec;

  friend bool operator==(const Injection&, const Injection&) = default;
};

/// The size-k error moving the fewest inputs: a (k-1)-fold controlled NOT with
/// positive controls on the window's lower k-1 lines and target on its top
/// line. Permutes exactly 2 of the 2^k window patterns.
Circuit worst_case_error(int width, int k, int window_start);

/// A random gate sequence confined to the window whose support is exactly the
/// k window lines, found by rejection sampling. Throws SamplingError once
/// max_attempts is exhausted.
Circuit random_error(int width, int k, int window_start, RngStream& stream,
                     const RandomErrorPolicy& policy = {});

/// Minimal set of lines the error acts on: a line is outside the support iff
/// the error never changes it and commutes with flipping it, both checked by
/// brute force over the 2^k window patterns. Gates must stay inside the
/// window; k is capped at 16.
std::vector<int> support(const Circuit& error, Window window);

/// l independent draws: position uniform over the g+1 gate gaps, window start
/// uniform over the n-k+1 placements. Per error the position is drawn first.
std::vector<Injection> random_injection_plan(long long gate_count, int width, int l,
                                             int k, RngStream& stream,
                                             ErrorKind kind = ErrorKind::worst_case,
                                             const RandomErrorPolicy& policy = {});

/// Stable content digest of a circuit (width + gate masks), hex encoded.
std::string circuit_digest(const Circuit& circuit);

/// Bookkeeping for one injection run: which error circuits went into which
/// gaps, plus the identity of the ideal circuit, enough to rebuild both the
/// ideal and the corrupted gate list exactly.
struct InjectionRecord {
  struct Source {
    int width;
    long long gate_count;
    std::string digest;

    friend bool operator==(const Source&, const Source&) = default;
  };
  struct Entry {
    long long position;
    Window window;
    ErrorKind kind;
    Circuit error;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Source source;
  std::vector<Entry> entries;  // non-decreasing by position

  nlohmann::ordered_json to_json() const;
  static InjectionRecord from_json(const nlohmann::json& doc);

  friend bool operator==(const InjectionRecord&, const InjectionRecord&) = default;
};

/// Splices the given errors into the circuit's gate gaps. Entries at equal
/// positions keep their given order. Random errors consume the stream; the
/// record materializes every error so the result can be rebuilt without it.
std::pair<Circuit, InjectionRecord> inject(const Circuit& circuit,
                                           std::span<const Injection> injections,
                                           RngStream& stream);

/// Rebuilds the corrupted circuit from the ideal one and a record.
Circuit apply_record(const Circuit& ideal, const InjectionRecord& record);

/// Removes the recorded error gates; returns the ideal circuit.
Circuit strip_record(const Circuit& corrupted, const InjectionRecord& record);

}  // namespace revsim

#endif  // REVSIM_ERRORS_HPP
