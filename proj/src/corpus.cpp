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

#include "lexboost/corpus.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>

#include "lexboost/errors.hpp"
#include "lexboost/text_norm.hpp"

namespace lexboost {

namespace {

std::int64_t parse_count(std::string_view field, std::size_t line_no) {
  std::int64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": count is not a decimal integer: '" +
                     std::string(field) + "'");
  }
  if (value < 1) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": count must be >= 1, got " + std::to_string(value));
  }
  return value;
}

}  // namespace

FrequencyTable load_frequency_table(std::istream& in) {
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'word<TAB>count', no tab found");
    }
    const std::string_view raw_word = std::string_view(line).substr(0, tab);
    const std::string_view raw_count = std::string_view(line).substr(tab + 1);

    const std::int64_t count = parse_count(raw_count, line_no);
    auto word = normalize_token(raw_word);
    if (!word) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": word '" + std::string(raw_word) +
                       "' is empty after normalization");
    }
    auto [it, inserted] = table.entries.emplace(std::move(*word), count);
    if (!inserted) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": duplicate word '" + it->first +
                            "' after normalization");
    }
  }
  if (table.entries.empty()) {
    throw ValidationError("frequency table input contains no records");
  }

  table.min_count = std::numeric_limits<std::int64_t>::max();
  for (const auto& [word, count] : table.entries) {
    table.total += count;
    table.min_count = std::min(table.min_count, count);
  }
  return table;
}

void save_frequency_table(const FrequencyTable& table, std::ostream& out) {
  for (const auto& [word, count] : table.entries) {
    out << word << '\t' << count << '\n';
  }
}

std::int64_t lookup_count(const FrequencyTable& table, std::string_view word,
                          std::int64_t fallback) {
  assert(fallback >= 1);
  const auto it = table.entries.find(std::string(word));
  return it != table.entries.end() ? it->second : fallback;
}

std::int64_t min_count(const FrequencyTable& table) { return table.min_count; }

std::int64_t min_count(const FrequencyTable& table,
                       const std::set<std::string>& restrict_to) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  bool found = false;
  for (const auto& word : restrict_to) {
    const auto it = table.entries.find(word);
    if (it != table.entries.end()) {
      best = std::min(best, it->second);
      found = true;
    }
  }
  if (!found) {
    throw ValidationError(
        "min_count: none of the restricted words exist in the table");
  }
  return best;
}

}  // namespace lexboost
