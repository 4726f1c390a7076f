// Copyright 2026 The lexboost Authors
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

#include "lexboost/rf_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "lexboost/errors.hpp"
#include "lexboost/io_util.hpp"

namespace lexboost {

RfMode parse_rf_mode(std::string_view name) {
  if (name == "legacy") return RfMode::kLegacy;
  if (name == "method1") return RfMode::kMethod1;
  if (name == "method1+2") return RfMode::kMethod1And2;
  throw ConfigError("unknown RF mode '" + std::string(name) +
                    "' (expected legacy, method1, or method1+2)");
}

std::string_view rf_mode_name(RfMode mode) {
  switch (mode) {
    case RfMode::kLegacy:
      return "legacy";
    case RfMode::kMethod1:
      return "method1";
    case RfMode::kMethod1And2:
      return "method1+2";
  }
  return "?";
}

RfTable::RfTable(std::vector<RfRow> rows, RfMode mode)
    : rows_(std::move(rows)), mode_(mode) {
  if (rows_.empty()) {
    throw ValidationError("RF table must have at least one row");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const RfRow& row = rows_[i];
    if (row.rank != i + 1) {
      throw ValidationError("RF table rows out of rank order: row " +
                            std::to_string(i) + " has rank " +
                            std::to_string(row.rank));
    }
    if (!std::isfinite(row.rf) || !std::isfinite(row.rf_raw)) {
      throw ValidationError("RF table row '" + row.word +
                            "' has a non-finite rf");
    }
    if (i > 0) {
      const RfRow& prev = rows_[i - 1];
      if (row.rf > prev.rf ||
          (row.rf == prev.rf && !(prev.word < row.word))) {
        throw ValidationError(
            "RF table ranking broken between '" + prev.word + "' and '" +
            row.word + "' (rf descending, ties by word ascending)");
      }
    }
    auto [it, inserted] = index_.emplace(row.word, i);
    if (!inserted) {
      throw ValidationError("RF table has duplicate word '" + row.word + "'");
    }
  }
}

const RfRow* RfTable::find(std::string_view word) const {
  const auto it = index_.find(word);
  return it == index_.end() ? nullptr : &rows_[it->second];
}

std::map<std::string, std::int64_t> merged_counts(const FrequencyTable& ltd,
                                                  const WordPool& pool,
                                                  RfMode mode) {
  if (pool.total_tokens <= 0 || pool.counts.empty()) {
    throw ValidationError("merged_counts: empty RF word pool");
  }

  std::map<std::string, std::int64_t> merged;
  if (mode == RfMode::kLegacy) {
    for (const auto& [word, _] : pool.counts) {
      const auto it = ltd.entries.find(word);
      merged.emplace(word, it != ltd.entries.end() ? it->second : 0);
    }
    return merged;
  }

  // Method 1: the fallback is the minimum LTD count among pool words
  // that the LTD does cover.
  std::int64_t fallback = std::numeric_limits<std::int64_t>::max();
  bool any_present = false;
  for (const auto& [word, _] : pool.counts) {
    const auto it = ltd.entries.find(word);
    if (it != ltd.entries.end()) {
      fallback = std::min(fallback, it->second);
      any_present = true;
    }
  }
  if (!any_present) {
    throw ValidationError(
        "merged_counts: no pool word exists in the LTD, the min-count "
        "fallback is undefined");
  }
  for (const auto& [word, _] : pool.counts) {
    merged.emplace(word, lookup_count(ltd, word, fallback));
  }
  return merged;
}

double clamp_rf(double rf_raw) { return rf_raw < 1.0 ? 1.0 : rf_raw; }

RfTable compute_rf_table(const FrequencyTable& ltd, const WordPool& pool,
                         RfMode mode) {
  const auto merged = merged_counts(ltd, pool, mode);

  double nf_denominator = 0;
  if (mode == RfMode::kLegacy) {
    nf_denominator = static_cast<double>(ltd.total);
  } else {
    std::int64_t sum = 0;
    for (const auto& [_, count] : merged) sum += count;
    nf_denominator = static_cast<double>(sum);
  }

  std::vector<RfRow> rows;
  rows.reserve(merged.size());
  std::vector<std::size_t> undefined;  // legacy rows with nf == 0
  double max_defined_rf = -std::numeric_limits<double>::infinity();

  for (const auto& [word, count] : merged) {
    RfRow row;
    row.word = word;
    row.count_used = count;
    row.nf = static_cast<double>(count) / nf_denominator;
    row.lf = static_cast<double>(pool.counts.at(word)) /
             static_cast<double>(pool.total_tokens);
    if (count == 0) {
      undefined.push_back(rows.size());
    } else {
      row.rf_raw = row.lf / row.nf;
      max_defined_rf = std::max(max_defined_rf, row.rf_raw);
    }
    rows.push_back(std::move(row));
  }

  if (!undefined.empty()) {
    if (!std::isfinite(max_defined_rf)) {
      throw ValidationError(
          "legacy mode: no pool word has a nonzero LTD count, no RF is "
          "defined to substitute from");
    }
    for (const std::size_t i : undefined) {
      rows[i].rf_raw = max_defined_rf;
    }
  }

  for (RfRow& row : rows) {
    row.rf = mode == RfMode::kMethod1And2 ? clamp_rf(row.rf_raw) : row.rf_raw;
  }

  std::sort(rows.begin(), rows.end(), [](const RfRow& a, const RfRow& b) {
    if (a.rf != b.rf) return a.rf > b.rf;
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;

  return RfTable(std::move(rows), mode);
}

double rf_lookup(const RfTable& table, std::string_view word) {
  const RfRow* row = table.find(word);
  return row != nullptr ? row->rf : 1.0;
}

namespace {

constexpr std::string_view kCsvHeader = "word,count_used,nf,lf,rf_raw,rf,rank";

std::int64_t parse_int_field(std::string_view field,
                             const std::string& context) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      field.empty()) {
    throw ParseError(context + ": not an integer: '" + std::string(field) +
                     "'");
  }
  return value;
}

// The CSV schema stores no mode column; recover it from the data. A zero
// NF can only come from the legacy zero-count rule, a clamped rf only
// from method 2. The remaining case is indistinguishable from an
// unclamped method1+2 table and behaves identically, so method1 is fine.
RfMode infer_mode(const std::vector<RfRow>& rows) {
  bool any_zero_nf = false;
  bool any_clamped = false;
  for (const RfRow& row : rows) {
    if (row.nf == 0.0) any_zero_nf = true;
    if (row.rf != row.rf_raw) any_clamped = true;
  }
  if (any_zero_nf) return RfMode::kLegacy;
  if (any_clamped) return RfMode::kMethod1And2;
  return RfMode::kMethod1;
}

}  // namespace

void write_rf_csv(const RfTable& table, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const RfRow& row : table.rows()) {
    out << csv_escape(row.word) << ',' << row.count_used << ','
        << format_double_17(row.nf) << ',' << format_double_17(row.lf) << ','
        << format_double_17(row.rf_raw) << ',' << format_double_17(row.rf)
        << ',' << row.rank << '\n';
  }
}

RfTable read_rf_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw ParseError("RF CSV: empty input");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw ParseError("RF CSV line 1: bad header, expected '" +
                     std::string(kCsvHeader) + "'");
  }

  std::vector<RfRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string context = "RF CSV line " + std::to_string(line_no);
    const auto fields = split_csv_line(line, context);
    if (fields.size() != 7) {
      throw ParseError(context + ": expected 7 fields, got " +
                       std::to_string(fields.size()));
    }
    RfRow row;
    row.word = fields[0];
    row.count_used = parse_int_field(fields[1], context);
    row.nf = parse_double_field(fields[2], context);
    row.lf = parse_double_field(fields[3], context);
    row.rf_raw = parse_double_field(fields[4], context);
    row.rf = parse_double_field(fields[5], context);
    const std::int64_t rank = parse_int_field(fields[6], context);
    if (rank < 1) {
      throw ParseError(context + ": rank must be >= 1");
    }
    row.rank = static_cast<std::size_t>(rank);
    rows.push_back(std::move(row));
  }

  const RfMode mode = infer_mode(rows);
  return RfTable(std::move(rows), mode);
}

}  // namespace lexboost
