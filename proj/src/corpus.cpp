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

#include "ranklaw/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "ranklaw/error.hpp"
#include "ranklaw/numfmt.hpp"

namespace ranklaw {

namespace {

char delimiter_of(TableFormat format) {
  return format == TableFormat::kCsv ? ',' : '\t';
}

struct RawRow {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based physical line the row starts on
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

// Splits delimited text into rows. Quoted fields may embed the delimiter,
// quotes (doubled) and newlines; line numbers refer to the physical line a
// row starts on.
std::vector<RawRow> split_rows(std::string_view text, char delim) {
  std::vector<RawRow> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    RawRow row;
    row.line = line;
    bool row_done = false;
    while (!row_done) {
      std::string field;
      if (i < n && text[i] == '"') {
        ++i;  // opening quote
        bool closed = false;
        while (i < n) {
          char c = text[i];
          if (c == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field.push_back('"');
              i += 2;
            } else {
              ++i;
              closed = true;
              break;
            }
          } else {
            if (c == '\n') ++line;
            field.push_back(c);
            ++i;
          }
        }
        if (!closed) parse_fail(row.line, "unterminated quoted field");
        if (i < n && text[i] != delim && text[i] != '\n' &&
            !(text[i] == '\r' && i + 1 < n && text[i + 1] == '\n')) {
          parse_fail(row.line, "unexpected character after closing quote");
        }
      } else {
        while (i < n) {
          char c = text[i];
          if (c == delim || c == '\n') break;
          if (c == '\r' && i + 1 < n && text[i + 1] == '\n') break;
          field.push_back(c);
          ++i;
        }
      }
      row.fields.push_back(std::move(field));

      if (i >= n) {
        row_done = true;
      } else if (text[i] == delim) {
        ++i;
      } else {  // newline
        if (text[i] == '\r') ++i;
        ++i;
        ++line;
        row_done = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_count_field(const std::string& text, const char* column,
                         std::size_t line) {
  double value = 0.0;
  if (!parse_double(text, value)) {
    parse_fail(line, std::string(column) + " is not a number: '" + text + "'");
  }
  if (value < 0.0) {
    parse_fail(line, std::string(column) + " must be non-negative, got '" +
                         text + "'");
  }
  return value;
}

double key_of(const SiteEntry& entry, RankKey key) {
  return key == RankKey::kHosts ? entry.hosts : entry.hits;
}

// Whole counts stay integers in JSON documents; synthetic real values keep
// full double precision.
nlohmann::ordered_json json_count(double value) {
  if (value == std::floor(value) && std::fabs(value) < 9007199254740992.0) {
    return static_cast<std::int64_t>(value);
  }
  return value;
}

std::string quote_field(const std::string& field, char delim) {
  const bool needs_quotes =
      field.find_first_of(std::string{delim, '"', '\n', '\r'}) !=
      std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const char* rank_key_name(RankKey key) {
  return key == RankKey::kHosts ? "hosts" : "hits";
}

RankKey rank_key_from_name(std::string_view name) {
  if (name == "hosts") return RankKey::kHosts;
  if (name == "hits") return RankKey::kHits;
  throw Error(ErrorKind::kUsage,
              "unknown rank key '" + std::string(name) + "'");
}

void validate_snapshot(const RatingSnapshot& snapshot) {
  const auto& entries = snapshot.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto expected = static_cast<std::int64_t>(i) + 1;
    if (entries[i].rank != expected) {
      throw Error(ErrorKind::kStructure,
                  "rank sequence broken at position " +
                      std::to_string(i + 1) + ": expected rank " +
                      std::to_string(expected) + ", found " +
                      std::to_string(entries[i].rank));
    }
    if (!(entries[i].hosts >= 0.0) || !(entries[i].hits >= 0.0) ||
        !std::isfinite(entries[i].hosts) || !std::isfinite(entries[i].hits)) {
      throw Error(ErrorKind::kParse,
                  "entry at rank " + std::to_string(entries[i].rank) +
                      " has a negative or non-finite count");
    }
  }
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (key_of(entries[i], snapshot.rank_key) >
        key_of(entries[i - 1], snapshot.rank_key)) {
      throw Error(ErrorKind::kMonotonicity,
                  std::string(rank_key_name(snapshot.rank_key)) +
                      " column is not non-increasing: first offending rank " +
                      std::to_string(entries[i].rank));
    }
  }
}

RatingSnapshot parse_snapshot(std::string_view text, TableFormat format,
                              RankKey rank_key) {
  const char delim = delimiter_of(format);
  auto rows = split_rows(text, delim);
  if (rows.empty()) {
    parse_fail(1, "empty input, expected header rank,label,hosts,hits");
  }

  const std::vector<std::string> expected_header = {"rank", "label", "hosts",
                                                    "hits"};
  if (rows.front().fields != expected_header) {
    parse_fail(rows.front().line, "expected header rank,label,hosts,hits");
  }

  RatingSnapshot snapshot;
  snapshot.rank_key = rank_key;
  snapshot.entries.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.fields.size() != 4) {
      parse_fail(row.line, "expected 4 fields, found " +
                               std::to_string(row.fields.size()));
    }
    SiteEntry entry;
    if (!parse_int64(row.fields[0], entry.rank) || entry.rank < 1) {
      parse_fail(row.line,
                 "rank must be a positive integer, got '" + row.fields[0] +
                     "'");
    }
    entry.label = row.fields[1];
    entry.hosts = parse_count_field(row.fields[2], "hosts", row.line);
    entry.hits = parse_count_field(row.fields[3], "hits", row.line);
    snapshot.entries.push_back(std::move(entry));
  }

  validate_snapshot(snapshot);
  return snapshot;
}

RatingSnapshot parse_snapshot(std::istream& in, TableFormat format,
                              RankKey rank_key) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_snapshot(buffer.str(), format, rank_key);
}

std::string serialize_table(const RatingSnapshot& snapshot,
                            TableFormat format) {
  const char delim = delimiter_of(format);
  std::string out = "rank";
  out += delim;
  out += "label";
  out += delim;
  out += "hosts";
  out += delim;
  out += "hits\n";
  for (const auto& entry : snapshot.entries) {
    out += std::to_string(entry.rank);
    out += delim;
    out += quote_field(entry.label, delim);
    out += delim;
    out += format_value(entry.hosts);
    out += delim;
    out += format_value(entry.hits);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json snapshot_to_json(const RatingSnapshot& snapshot) {
  nlohmann::ordered_json j;
  j["category"] = snapshot.category;
  j["period"] = snapshot.period;
  j["rank_key"] = rank_key_name(snapshot.rank_key);
  auto entries = nlohmann::ordered_json::array();
  for (const auto& entry : snapshot.entries) {
    nlohmann::ordered_json e;
    e["rank"] = entry.rank;
    e["label"] = entry.label;
    e["hosts"] = json_count(entry.hosts);
    e["hits"] = json_count(entry.hits);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

RatingSnapshot snapshot_from_json(const nlohmann::json& j) {
  try {
    RatingSnapshot snapshot;
    snapshot.category = j.value("category", std::string{});
    snapshot.period = j.value("period", std::string{});
    const auto& rank_key =
        j.at("rank_key").get_ref<const nlohmann::json::string_t&>();
    if (rank_key != "hosts" && rank_key != "hits") {
      throw Error(ErrorKind::kParse, "unknown rank_key '" + rank_key + "'");
    }
    snapshot.rank_key =
        rank_key == "hosts" ? RankKey::kHosts : RankKey::kHits;
    for (const auto& e : j.at("entries")) {
      SiteEntry entry;
      const auto& rank = e.at("rank");
      if (!rank.is_number_integer() || rank.get<std::int64_t>() < 1) {
        throw Error(ErrorKind::kParse, "rank must be a positive integer");
      }
      entry.rank = rank.get<std::int64_t>();
      entry.label = e.value("label", std::string{});
      entry.hosts = e.at("hosts").get<double>();
      entry.hits = e.at("hits").get<double>();
      snapshot.entries.push_back(std::move(entry));
    }
    validate_snapshot(snapshot);
    return snapshot;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse,
                std::string("malformed snapshot document: ") + ex.what());
  }
}

RatingSnapshot rerank(const RatingSnapshot& snapshot, RankKey new_key) {
  RatingSnapshot out = snapshot;
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [new_key](const SiteEntry& a, const SiteEntry& b) {
                     return key_of(a, new_key) > key_of(b, new_key);
                   });
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    out.entries[i].rank = static_cast<std::int64_t>(i) + 1;
  }
  out.rank_key = new_key;
  return out;
}

}  // namespace ranklaw
