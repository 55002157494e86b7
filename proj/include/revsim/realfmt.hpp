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

#ifndef REVSIM_REALFMT_HPP
#define REVSIM_REALFMT_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revsim/circuit.hpp"

namespace revsim {

/// A parsed `.real` file (the Toffoli-family subset; see docs/real_format.md).
/// Line i of the circuit is variable i in declaration order.
struct RealDocument {
  std::string version;  // empty when the file has no .version line
  int numvars = 0;
  std::vector<std::string> variables;
  std::vector<Gate> gates;
  /// Full-line comments, verbatim (leading '#'-lines).
  std::vector<std::string> comments;
  /// .inputs/.outputs/.constants/.garbage payloads, verbatim, in file order.
  std::vector<std::pair<std::string, std::string>> metadata;

  Circuit to_circuit() const { return Circuit(numvars, gates); }
};

/// Parses the documented subset: `.version`, `.numvars N`, `.variables ...`,
/// the four verbatim metadata directives, and `tK v1 .. vK` gate lines between
/// `.begin`/`.end`. A `-` prefix on a control token means negative polarity;
/// `#` starts a comment. Malformed input raises ParseError with the 1-based
/// line number.
RealDocument parse_real(std::string_view text);

/// Canonical serialization: lowercase directives, one gate per line, controls
/// in ascending line order, newline-terminated. Names default to x1..xn.
/// parse_real(write_real(c)) reproduces c exactly.
std::string write_real(const Circuit& circuit,
                       std::span<const std::string> names = {});

}  // namespace revsim

#endif  // REVSIM_REALFMT_HPP
