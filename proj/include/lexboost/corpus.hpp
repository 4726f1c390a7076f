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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace lexboost {

// Unigram frequency table of a large-text dataset (LTD), e.g. a
// web-scale word-count list. Immutable after construction; counts are
// 64-bit because web-scale totals overflow 32 bits.
struct FrequencyTable {
  std::map<std::string, std::int64_t> entries;  // normalized word -> count
  std::int64_t total = 0;                       // sum of all counts
  std::int64_t min_count = 0;                   // smallest count in entries
};

// Parses the line-oriented `word<TAB>count` format. Words are run
// through normalize_token before insertion; a duplicate normalized word
// or an empty stream is a ValidationError, a malformed line a
// ParseError (the message carries the 1-based line number).
FrequencyTable load_frequency_table(std::istream& in);

// Writes the same `word<TAB>count` format, words in ascending order.
// load(save(t)) reproduces t exactly.
void save_frequency_table(const FrequencyTable& table, std::ostream& out);

// Stored count if present, otherwise `fallback`. `fallback` must be >= 1
// so the result is never zero.
std::int64_t lookup_count(const FrequencyTable& table, std::string_view word,
                          std::int64_t fallback);

// Minimum count over the whole table.
std::int64_t min_count(const FrequencyTable& table);

// Minimum count over the words of `restrict_to` that are present in the
// table. Empty intersection is a ValidationError.
std::int64_t min_count(const FrequencyTable& table,
                       const std::set<std::string>& restrict_to);

}  // namespace lexboost
