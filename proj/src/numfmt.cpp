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

#include "ranklaw/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace ranklaw {

namespace {
// Largest magnitude below which every integer is exactly representable.
constexpr double kExactIntLimit = 9007199254740992.0;  // 2^53
}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_value(double value) {
  if (std::isfinite(value) && value == std::floor(value) &&
      std::fabs(value) < kExactIntLimit) {
    char buf[32];
    auto res =
        std::to_chars(buf, buf + sizeof(buf), static_cast<long long>(value));
    return std::string(buf, res.ptr);
  }
  return format_double(value);
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) return false;
  if (!std::isfinite(value)) return false;
  out = value;
  return true;
}

bool parse_int64(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) return false;
  out = value;
  return true;
}

}  // namespace ranklaw
