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
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lexboost/corpus.hpp"
#include "lexboost/ocr_pool.hpp"

namespace lexboost {

// How LTD counts are merged with the OCR pool.
//
//   kLegacy    : absent words get count 0, normal frequency runs over the
//                full LTD, and the undefined relative frequencies are
//                substituted with the maximum defined one.
//   kMethod1   : absent words get the minimum LTD count among pool words,
//                and normal frequency is restricted to the pool word set.
//   kMethod1And2 : method 1 plus clamping of every RF below 1 up to 1.
enum class RfMode { kLegacy, kMethod1, kMethod1And2 };

// "legacy" | "method1" | "method1+2" <-> RfMode.
RfMode parse_rf_mode(std::string_view name);
std::string_view rf_mode_name(RfMode mode);

struct RfRow {
  std::string word;
  std::int64_t count_used = 0;  // merged count feeding NF
  double nf = 0;                // normal frequency
  double lf = 0;                // lecture frequency
  double rf_raw = 0;            // lf / nf before any clamping
  double rf = 0;                // final value (clamped in method1+2)
  std::size_t rank = 0;         // 1-based, rf descending, ties by word
};

// Per-word relative-frequency table over the pool's word set. Rows are
// stored in rank order (rows[i].rank == i + 1). Immutable once built.
class RfTable {
 public:
  RfTable(std::vector<RfRow> rows, RfMode mode);

  const std::vector<RfRow>& rows() const { return rows_; }
  RfMode mode() const { return mode_; }

  // nullptr when the word is not in the table.
  const RfRow* find(std::string_view word) const;

 private:
  std::vector<RfRow> rows_;
  RfMode mode_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Merged per-word counts over the pool's word set. In the method1 modes
// a pool with no LTD overlap is a ValidationError (no minimum exists);
// in legacy mode absent words simply get 0.
std::map<std::string, std::int64_t> merged_counts(const FrequencyTable& ltd,
                                                  const WordPool& pool,
                                                  RfMode mode);

// Builds the full table: merge, NF, LF, RF, clamping, ranking.
RfTable compute_rf_table(const FrequencyTable& ltd, const WordPool& pool,
                         RfMode mode);

// max(rf_raw, 1).
double clamp_rf(double rf_raw);

// The word's rf, or the neutral 1.0 for words outside the table.
double rf_lookup(const RfTable& table, std::string_view word);

// CSV round-trip. Header `word,count_used,nf,lf,rf_raw,rf,rank`, rows in
// rank order, floats at 17 significant digits so values survive exactly.
void write_rf_csv(const RfTable& table, std::ostream& out);
RfTable read_rf_csv(std::istream& in);

}  // namespace lexboost
