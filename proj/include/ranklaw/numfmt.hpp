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

#ifndef RANKLAW_NUMFMT_HPP_
#define RANKLAW_NUMFMT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace ranklaw {

// Locale-independent numeric formatting/parsing. All file formats and CLI
// output go through these so identical inputs yield identical bytes.

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Like format_double, but integral values small enough to be exact in a
/// double are printed without a fractional part ("290", not "290.0").
std::string format_value(double value);

/// Parses a finite double. Returns false on trailing garbage, overflow,
/// inf/nan spellings, or empty input.
bool parse_double(std::string_view text, double& out);

/// Parses a decimal integer with no sign-free garbage allowed.
bool parse_int64(std::string_view text, std::int64_t& out);

}  // namespace ranklaw

#endif  // RANKLAW_NUMFMT_HPP_
