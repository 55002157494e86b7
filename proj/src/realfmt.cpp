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

#include "revsim/realfmt.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "revsim/exceptions.hpp"

namespace revsim {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

bool parse_int(std::string_view token, int& value) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc{} && ptr == end;
}

void check_name(const std::string& name, int line_no) {
  if (name.empty() || name.front() == '-' || name.front() == '.' ||
      name.front() == '#') {
    throw ParseError("invalid variable name '" + name + "'", line_no);
  }
}

}  // namespace

RealDocument parse_real(std::string_view text) {
  RealDocument doc;
  std::unordered_map<std::string_view, int> line_of;
  bool saw_numvars = false;
  bool in_body = false;
  bool saw_end = false;

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (!text.empty() && text.back() == '\n') lines.pop_back();

  int line_no = 0;
  for (std::string_view raw : lines) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    // Full-line comments are preserved verbatim; inline comments are stripped.
    std::string_view line = raw;
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') {
      doc.comments.emplace_back(raw);
      continue;
    }
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view head = tokens.front();

    if (head.front() == '.') {
      if (saw_end) throw ParseError("content after .end", line_no);
      if (head == ".begin") {
        if (in_body) throw ParseError("nested .begin", line_no);
        if (!saw_numvars) throw ParseError("missing .numvars before .begin", line_no);
        if (doc.variables.empty()) {
          for (int i = 1; i <= doc.numvars; ++i) {
            doc.variables.push_back("x" + std::to_string(i));
          }
          for (int i = 0; i < doc.numvars; ++i) {
            line_of.emplace(doc.variables[static_cast<std::size_t>(i)], i);
          }
        }
        in_body = true;
      } else if (head == ".end") {
        if (!in_body) throw ParseError(".end without .begin", line_no);
        in_body = false;
        saw_end = true;
      } else if (in_body) {
        throw ParseError("directive inside .begin/.end body", line_no);
      } else if (head == ".version") {
        const std::size_t at = line.find(".version") + 8;
        const std::size_t start = line.find_first_not_of(" \t", at);
        doc.version = start == std::string_view::npos
                          ? ""
                          : std::string(line.substr(start));
      } else if (head == ".numvars") {
        if (saw_numvars) throw ParseError("duplicate .numvars", line_no);
        if (tokens.size() != 2 || !parse_int(tokens[1], doc.numvars)) {
          throw ParseError(".numvars expects one integer", line_no);
        }
        if (doc.numvars < 1 || doc.numvars > kMaxWidth) {
          throw ParseError(".numvars must be in [1, 64]", line_no);
        }
        saw_numvars = true;
      } else if (head == ".variables") {
        if (!saw_numvars) throw ParseError(".variables before .numvars", line_no);
        if (!doc.variables.empty()) throw ParseError("duplicate .variables", line_no);
        if (static_cast<int>(tokens.size()) - 1 != doc.numvars) {
          throw ParseError(".variables lists " + std::to_string(tokens.size() - 1) +
                               " names but .numvars says " + std::to_string(doc.numvars),
                           line_no);
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string name(tokens[i]);
          check_name(name, line_no);
          doc.variables.push_back(std::move(name));
        }
        for (int i = 0; i < doc.numvars; ++i) {
          const auto& name = doc.variables[static_cast<std::size_t>(i)];
          if (!line_of.emplace(name, i).second) {
            throw ParseError("duplicate variable '" + name + "'", line_no);
          }
        }
      } else if (head == ".inputs" || head == ".outputs" || head == ".constants" ||
                 head == ".garbage") {
        const std::size_t at = line.find(head) + head.size();
        const std::size_t start = line.find_first_not_of(" \t", at);
        doc.metadata.emplace_back(std::string(head),
                                  start == std::string_view::npos
                                      ? ""
                                      : std::string(line.substr(start)));
      } else {
        throw ParseError("unknown directive '" + std::string(head) + "'", line_no);
      }
      continue;
    }

    // Gate line.
    if (!in_body) {
      throw ParseError("gate line outside .begin/.end", line_no);
    }
    if (head.front() != 't') {
      throw ParseError("unsupported gate '" + std::string(head) +
                           "' (only tK gates are accepted)",
                       line_no);
    }
    int arity = 0;
    if (!parse_int(head.substr(1), arity) || arity < 1) {
      throw ParseError("malformed gate name '" + std::string(head) + "'", line_no);
    }
    if (static_cast<int>(tokens.size()) - 1 != arity) {
      throw ParseError("gate t" + std::to_string(arity) + " expects " +
                           std::to_string(arity) + " operands, got " +
                           std::to_string(tokens.size() - 1),
                       line_no);
    }
    std::vector<Control> controls;
    std::uint64_t used = 0;
    const auto resolve = [&](std::string_view token) -> int {
      const auto it = line_of.find(token);
      if (it == line_of.end()) {
        throw ParseError("undeclared variable '" + std::string(token) + "'", line_no);
      }
      const std::uint64_t bit = std::uint64_t{1} << it->second;
      if (used & bit) {
        throw ParseError("line '" + std::string(token) + "' used twice in one gate",
                         line_no);
      }
      used |= bit;
      return it->second;
    };
    for (int i = 1; i < arity; ++i) {
      std::string_view token = tokens[static_cast<std::size_t>(i)];
      Polarity polarity = Polarity::positive;
      if (token.front() == '-') {
        polarity = Polarity::negative;
        token.remove_prefix(1);
      }
      controls.push_back({resolve(token), polarity});
    }
    const std::string_view target_token = tokens[static_cast<std::size_t>(arity)];
    if (target_token.front() == '-') {
      throw ParseError("target must not carry a polarity prefix", line_no);
    }
    doc.gates.emplace_back(resolve(target_token), controls);
  }

  if (in_body) throw ParseError("missing .end", line_no + 1);
  if (!saw_end) throw ParseError("missing .begin/.end body", line_no);
  return doc;
}

std::string write_real(const Circuit& circuit, std::span<const std::string> names) {
  std::vector<std::string> defaults;
  if (names.empty()) {
    defaults.reserve(static_cast<std::size_t>(circuit.width()));
    for (int i = 1; i <= circuit.width(); ++i) {
      defaults.push_back("x" + std::to_string(i));
    }
    names = defaults;
  }
  if (static_cast<int>(names.size()) != circuit.width()) {
    throw std::invalid_argument("expected " + std::to_string(circuit.width()) +
                                " variable names, got " + std::to_string(names.size()));
  }
  std::unordered_set<std::string_view> unique;
  for (const std::string& name : names) {
    if (name.empty() || name.front() == '-' || name.front() == '.' ||
        name.front() == '#' ||
        name.find_first_of(" \t\r\n") != std::string::npos ||
        !unique.insert(name).second) {
      throw std::invalid_argument("invalid or duplicate variable name '" + name + "'");
    }
  }

  std::string out;
  out += ".version 1.0\n";
  out += ".numvars " + std::to_string(circuit.width()) + "\n";
  out += ".variables";
  for (const std::string& name : names) {
    out += ' ';
    out += name;
  }
  out += "\n.begin\n";
  for (const Gate& gate : circuit.gates()) {
    out += 't' + std::to_string(gate.control_count() + 1);
    for (const Control& control : gate.controls()) {
      out += ' ';
      if (control.polarity == Polarity::negative) out += '-';
      out += names[static_cast<std::size_t>(control.line)];
    }
    out += ' ';
    out += names[static_cast<std::size_t>(gate.target())];
    out += '\n';
  }
  out += ".end\n";
  return out;
}

}  // namespace revsim
