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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexboost {

// One OCR capture, typically a video frame sampled at a fixed interval.
struct OcrDocument {
  std::string source;        // e.g. video or lecture id; never empty
  double timestamp_sec = 0;  // capture time, >= 0
  std::string text;          // raw OCR output for the frame
};

// The aggregated multiset of normalized tokens over all captures.
// Repeated slides are kept as repeats; persistent terms are supposed to
// count more.
struct WordPool {
  std::map<std::string, std::int64_t> counts;  // token -> occurrences
  std::int64_t total_tokens = 0;
};

// Tokenizes every document and aggregates counts. Throws
// ValidationError when not a single usable token comes out.
WordPool build_pool(std::span<const OcrDocument> docs);

// count(word) / total_tokens; 0 for words outside the pool.
double lecture_frequency(const WordPool& pool, std::string_view word);

// Reads an OCR dump. If the first non-blank line parses as a JSON
// object, the stream is JSON Lines with records
//   {"source": string, "timestamp_sec": number, "text": string}
// otherwise the whole stream is one plain-text document with
// timestamp 0 and `fallback_source` as its source id.
std::vector<OcrDocument> read_ocr_dump(std::istream& in,
                                       const std::string& fallback_source);

}  // namespace lexboost
