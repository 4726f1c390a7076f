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

#include "lexboost/rescore.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "lexboost/errors.hpp"
#include "lexboost/text_norm.hpp"

namespace lexboost {

double score_ocr(std::string_view text, const RfTable& rf, double k) {
  if (k >= 0) {
    throw ConfigError("score_ocr: slope k must be negative, got " +
                      std::to_string(k));
  }
  const auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw ValidationError("score_ocr: text has no usable tokens");
  }
  const double inv_k = 1.0 / k;
  double sum = 0;
  for (const auto& token : tokens) {
    sum += 1.0 - std::pow(rf_lookup(rf, token), inv_k);
  }
  return sum / static_cast<double>(tokens.size());
}

double merge_scores(double score_old, double ocr, double lambda_ocr) {
  return score_old + lambda_ocr * ocr;
}

NBestList rescore_nbest(const NBestList& list, const RfTable& rf,
                        const RescoreConfig& config) {
  if (config.k >= 0) {
    throw ConfigError("rescore: slope k must be negative, got " +
                      std::to_string(config.k));
  }
  if (config.lambda_ocr < 0) {
    throw ConfigError("rescore: lambda must be >= 0, got " +
                      std::to_string(config.lambda_ocr));
  }
  if (list.hypotheses.empty()) {
    throw ValidationError("utterance '" + list.utterance_id +
                          "': empty n-best list");
  }

  NBestList out;
  out.utterance_id = list.utterance_id;
  out.hypotheses.reserve(list.hypotheses.size());
  for (std::size_t i = 0; i < list.hypotheses.size(); ++i) {
    Hypothesis hyp = list.hypotheses[i];
    try {
      hyp.score_ocr = score_ocr(hyp.text, rf, config.k);
    } catch (const ValidationError&) {
      throw ValidationError("utterance '" + list.utterance_id +
                            "' hypothesis " + std::to_string(i) +
                            ": no usable tokens");
    }
    hyp.score_new =
        merge_scores(hyp.score_old, *hyp.score_ocr, config.lambda_ocr);
    out.hypotheses.push_back(std::move(hyp));
  }
  std::stable_sort(out.hypotheses.begin(), out.hypotheses.end(),
                   [](const Hypothesis& a, const Hypothesis& b) {
                     return *a.score_new > *b.score_new;
                   });
  return out;
}

std::vector<NBestList> read_nbest_jsonl(std::istream& in) {
  std::vector<NBestList> lists;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string context = "n-best line " + std::to_string(line_no);

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(context + ": invalid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("utterance_id") ||
        !j.contains("hypotheses")) {
      throw ParseError(context +
                       ": expected object with 'utterance_id' and "
                       "'hypotheses'");
    }

    NBestList list;
    try {
      list.utterance_id = j.at("utterance_id").get<std::string>();
      for (const auto& h : j.at("hypotheses")) {
        Hypothesis hyp;
        hyp.text = h.at("text").get<std::string>();
        hyp.score_old = h.at("score_old").get<double>();
        if (h.contains("score_ocr")) hyp.score_ocr = h.at("score_ocr").get<double>();
        if (h.contains("score_new")) hyp.score_new = h.at("score_new").get<double>();
        list.hypotheses.push_back(std::move(hyp));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(context + ": bad field: " + e.what());
    }
    if (list.utterance_id.empty()) {
      throw ValidationError(context + ": 'utterance_id' must be non-empty");
    }
    if (list.hypotheses.empty()) {
      throw ValidationError(context + ": 'hypotheses' must be non-empty");
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

void write_nbest_jsonl(const std::vector<NBestList>& lists,
                       std::ostream& out) {
  for (const NBestList& list : lists) {
    nlohmann::json hyps = nlohmann::json::array();
    for (const Hypothesis& hyp : list.hypotheses) {
      nlohmann::json h{{"text", hyp.text}, {"score_old", hyp.score_old}};
      if (hyp.score_ocr) h["score_ocr"] = *hyp.score_ocr;
      if (hyp.score_new) h["score_new"] = *hyp.score_new;
      hyps.push_back(std::move(h));
    }
    const nlohmann::json j{{"utterance_id", list.utterance_id},
                           {"hypotheses", std::move(hyps)}};
    out << j.dump() << '\n';
  }
}

}  // namespace lexboost
