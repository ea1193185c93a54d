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

#ifndef RANKLAW_CORPUS_HPP_
#define RANKLAW_CORPUS_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ranklaw {

/// The column a rating list is sorted by, descending.
enum class RankKey { kHosts, kHits };

const char* rank_key_name(RankKey key);
RankKey rank_key_from_name(std::string_view name);

enum class TableFormat { kCsv, kTsv };

/// One row of a rating page: position, site description, unique hosts and
/// served pages for the period.
///
/// Hosts and hits are stored as doubles: parsed rating pages always carry
/// whole numbers, but synthetic snapshots are generated with the rounding
/// step disabled and must survive a CSV/JSON round trip losslessly.
struct SiteEntry {
  std::int64_t rank = 0;
  std::string label;
  double hosts = 0.0;
  double hits = 0.0;

  bool operator==(const SiteEntry&) const = default;
};

/// An ordered rating list for one category and period.
///
/// Invariants (enforced by every constructor path):
///   - ranks are exactly 1..n in list order,
///   - the column named by rank_key is non-increasing.
struct RatingSnapshot {
  std::string category;
  std::string period;
  RankKey rank_key = RankKey::kHosts;
  std::vector<SiteEntry> entries;

  bool operator==(const RatingSnapshot&) const = default;
};

/// Throws Error(kStructure/kMonotonicity/kParse) if the snapshot violates
/// an invariant. Zero hosts or hits are legal; exclusion happens at fit
/// time, not here.
void validate_snapshot(const RatingSnapshot& snapshot);

/// Parses a delimited table with mandatory header `rank,label,hosts,hits`.
/// Labels may be quoted (RFC-4180 style, doubled quotes escape) to embed
/// delimiters or newlines. The caller declares which column the file is
/// sorted by; a violation is a hard error, not an auto-repair.
RatingSnapshot parse_snapshot(std::string_view text, TableFormat format,
                              RankKey rank_key);
RatingSnapshot parse_snapshot(std::istream& in, TableFormat format,
                              RankKey rank_key);

/// Canonical delimited serialization; parse_snapshot(serialize_table(s))
/// reproduces s exactly.
std::string serialize_table(const RatingSnapshot& snapshot,
                            TableFormat format);

nlohmann::ordered_json snapshot_to_json(const RatingSnapshot& snapshot);
RatingSnapshot snapshot_from_json(const nlohmann::json& j);

/// Stable re-sort by new_key descending with ranks reassigned 1..n; ties
/// keep their prior relative order so results are deterministic.
RatingSnapshot rerank(const RatingSnapshot& snapshot, RankKey new_key);

}  // namespace ranklaw

#endif  // RANKLAW_CORPUS_HPP_
