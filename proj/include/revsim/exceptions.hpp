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

#ifndef REVSIM_EXCEPTIONS_HPP
#define REVSIM_EXCEPTIONS_HPP

#include <stdexcept>
#include <string>

namespace revsim {

/// Base class for revsim-specific failures. Argument validation uses
/// std::invalid_argument directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive structure (permutation table, support analysis) was requested
/// beyond its documented width cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling ran out of attempts. Never silently degraded: callers
/// must either handle or propagate this.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Malformed `.real` input. Carries the 1-based line number of the offending
/// line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A destination file or stream could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace revsim

#endif  // REVSIM_EXCEPTIONS_HPP
