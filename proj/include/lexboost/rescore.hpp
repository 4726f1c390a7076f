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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexboost/rf_model.hpp"

namespace lexboost {

struct Hypothesis {
  std::string text;
  double score_old = 0;  // decoder score, treated as an opaque additive term
  std::optional<double> score_ocr;
  std::optional<double> score_new;
};

// The scored hypotheses a decoder emitted for one utterance, best first.
struct NBestList {
  std::string utterance_id;
  std::vector<Hypothesis> hypotheses;
};

struct RescoreConfig {
  double lambda_ocr = 1.0;  // weight of the OCR score, >= 0
  double k = -1.0;          // fitted slope; must be negative
};

// Mean over the hypothesis tokens of 1 - rf^(1/k). With every rf >= 1
// (a method1+2 table) and k < 0 each term sits in [0, 1), so common
// words contribute nothing and lecture terms push the score up.
// Empty token sequence is a ValidationError, k >= 0 a ConfigError.
double score_ocr(std::string_view text, const RfTable& rf, double k);

// score_old + lambda * ocr.
double merge_scores(double score_old, double ocr, double lambda_ocr);

// Scores every hypothesis and re-sorts by score_new descending, stable
// on ties. The input list is untouched.
NBestList rescore_nbest(const NBestList& list, const RfTable& rf,
                        const RescoreConfig& config);

// JSON Lines n-best I/O. One object per utterance:
//   {"utterance_id": id, "hypotheses": [{"text": ..., "score_old": ...}]}
// with "score_ocr" / "score_new" accepted on input and added on output.
std::vector<NBestList> read_nbest_jsonl(std::istream& in);
void write_nbest_jsonl(const std::vector<NBestList>& lists, std::ostream& out);

}  // namespace lexboost
