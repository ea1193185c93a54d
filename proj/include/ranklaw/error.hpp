// Copyright 2026 ranklaw authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANKLAW_ERROR_HPP_
#define RANKLAW_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ranklaw {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes, so additions here need a mapping there too.
enum class ErrorKind {
  kUsage,              // caller broke an interface contract
  kIo,                 // file could not be read or written
  kParse,              // malformed input text (names the offending line)
  kStructure,          // rank sequence is not 1..n
  kMonotonicity,       // rank-key column increases somewhere
  kInsufficientData,   // fewer usable points than the estimator needs
  kDegenerateAbscissa, // all usable x values identical
  kDegenerateData,     // estimator denominator vanishes
  kDivisionByZero,     // rank law with zero exponent cannot be eliminated
  kDomain,             // argument outside the mathematical domain
  kNonInvertible,      // power law with zero exponent has no inverse
  kUndefinedAggregate, // totals ratio has a zero denominator
  kEmptyPlot,          // nothing to draw
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ranklaw

#endif  // RANKLAW_ERROR_HPP_
