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

#include "ranklaw/error.hpp"

namespace ranklaw {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kStructure: return "structure";
    case ErrorKind::kMonotonicity: return "monotonicity";
    case ErrorKind::kInsufficientData: return "insufficient-data";
    case ErrorKind::kDegenerateAbscissa: return "degenerate-abscissa";
    case ErrorKind::kDegenerateData: return "degenerate-data";
    case ErrorKind::kDivisionByZero: return "division-by-zero";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kNonInvertible: return "non-invertible";
    case ErrorKind::kUndefinedAggregate: return "undefined-aggregate";
    case ErrorKind::kEmptyPlot: return "empty-plot";
  }
  return "unknown";
}

}  // namespace ranklaw
