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

#include "lexboost/rescore.hpp"

namespace lexboost {

struct UtteranceEval {
  std::string utterance_id;
  double wer_baseline = 0;
  double wer_rescored = 0;
};

// Token-weighted before/after comparison. The aggregates are total edit
// distance over total reference length, not a mean of per-utterance
// rates.
struct EvalReport {
  std::vector<UtteranceEval> per_utterance;
  double aggregate_baseline = 0;
  double aggregate_rescored = 0;
  double delta = 0;  // rescored - baseline
};

// Token-level Levenshtein distance (unit substitution, insertion,
// deletion costs) over normalized token sequences.
std::int64_t edit_distance(std::span<const std::string> ref,
                           std::span<const std::string> hyp);

// edit_distance / reference length. Both strings go through the shared
// tokenizer; an empty reference is a ValidationError. Can exceed 1 when
// the hypothesis inserts more tokens than the reference holds.
double word_error_rate(std::string_view reference, std::string_view hypothesis);

// Top-1 WER of each run per utterance plus the aggregates. Every
// utterance must appear in both runs and have a reference. The top
// hypothesis is picked by a stable sort on score_new when every
// hypothesis carries one, otherwise on score_old.
EvalReport compare_runs(const std::map<std::string, std::string>& refs,
                        std::span<const NBestList> baseline,
                        std::span<const NBestList> rescored);

// References as JSON Lines {"utterance_id": ..., "text": ...}.
std::map<std::string, std::string> read_references_jsonl(std::istream& in);

// Report serialization used by the CLI.
void write_report_json(const EvalReport& report, std::ostream& out);

}  // namespace lexboost
