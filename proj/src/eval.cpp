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

#include "lexboost/eval.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "lexboost/errors.hpp"
#include "lexboost/text_norm.hpp"

namespace lexboost {

std::int64_t edit_distance(std::span<const std::string> ref,
                           std::span<const std::string> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::int64_t> prev(m + 1);
  std::vector<std::int64_t> curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = static_cast<std::int64_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int64_t sub =
          prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      curr[j] = std::min({sub, prev[j] + 1, curr[j - 1] + 1});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double word_error_rate(std::string_view reference,
                       std::string_view hypothesis) {
  const auto ref = tokenize(reference);
  if (ref.empty()) {
    throw ValidationError("word_error_rate: reference has no usable tokens");
  }
  const auto hyp = tokenize(hypothesis);
  return static_cast<double>(edit_distance(ref, hyp)) /
         static_cast<double>(ref.size());
}

namespace {

// Top-1 selection mirrors the rescorer: stable sort, best score first.
const Hypothesis& top_hypothesis(const NBestList& list) {
  if (list.hypotheses.empty()) {
    throw ValidationError("utterance '" + list.utterance_id +
                          "': empty n-best list");
  }
  const bool use_new =
      std::all_of(list.hypotheses.begin(), list.hypotheses.end(),
                  [](const Hypothesis& h) { return h.score_new.has_value(); });
  const Hypothesis* best = &list.hypotheses.front();
  for (const Hypothesis& h : list.hypotheses) {
    const double score = use_new ? *h.score_new : h.score_old;
    const double best_score = use_new ? *best->score_new : best->score_old;
    if (score > best_score) best = &h;
  }
  return *best;
}

}  // namespace

EvalReport compare_runs(const std::map<std::string, std::string>& refs,
                        std::span<const NBestList> baseline,
                        std::span<const NBestList> rescored) {
  std::map<std::string, const NBestList*> rescored_by_id;
  for (const NBestList& list : rescored) {
    rescored_by_id[list.utterance_id] = &list;
  }
  std::set<std::string> baseline_ids;
  for (const NBestList& list : baseline) {
    baseline_ids.insert(list.utterance_id);
  }
  if (rescored_by_id.size() != rescored.size() ||
      baseline_ids.size() != baseline.size() ||
      baseline.size() != rescored.size()) {
    throw ValidationError(
        "compare_runs: baseline and rescored runs must cover the same "
        "utterances exactly once");
  }

  EvalReport report;
  std::int64_t base_errors = 0;
  std::int64_t resc_errors = 0;
  std::int64_t ref_tokens = 0;

  for (const NBestList& base_list : baseline) {
    const auto ref_it = refs.find(base_list.utterance_id);
    if (ref_it == refs.end()) {
      throw ValidationError("compare_runs: no reference for utterance '" +
                            base_list.utterance_id + "'");
    }
    const auto resc_it = rescored_by_id.find(base_list.utterance_id);
    if (resc_it == rescored_by_id.end()) {
      throw ValidationError("compare_runs: utterance '" +
                            base_list.utterance_id +
                            "' missing from the rescored run");
    }

    const auto ref = tokenize(ref_it->second);
    if (ref.empty()) {
      throw ValidationError("compare_runs: reference for utterance '" +
                            base_list.utterance_id + "' has no usable tokens");
    }
    const auto base_hyp = tokenize(top_hypothesis(base_list).text);
    const auto resc_hyp = tokenize(top_hypothesis(*resc_it->second).text);

    const std::int64_t d_base = edit_distance(ref, base_hyp);
    const std::int64_t d_resc = edit_distance(ref, resc_hyp);
    const auto len = static_cast<std::int64_t>(ref.size());

    report.per_utterance.push_back(
        UtteranceEval{base_list.utterance_id,
                      static_cast<double>(d_base) / static_cast<double>(len),
                      static_cast<double>(d_resc) / static_cast<double>(len)});
    base_errors += d_base;
    resc_errors += d_resc;
    ref_tokens += len;
  }

  report.aggregate_baseline =
      static_cast<double>(base_errors) / static_cast<double>(ref_tokens);
  report.aggregate_rescored =
      static_cast<double>(resc_errors) / static_cast<double>(ref_tokens);
  report.delta = report.aggregate_rescored - report.aggregate_baseline;
  return report;
}

std::map<std::string, std::string> read_references_jsonl(std::istream& in) {
  std::map<std::string, std::string> refs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string context = "references line " + std::to_string(line_no);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(context + ": invalid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("utterance_id") || !j.contains("text")) {
      throw ParseError(context +
                       ": expected object with 'utterance_id' and 'text'");
    }
    std::string id;
    std::string text;
    try {
      id = j.at("utterance_id").get<std::string>();
      text = j.at("text").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(context + ": bad field: " + e.what());
    }
    if (id.empty()) {
      throw ValidationError(context + ": 'utterance_id' must be non-empty");
    }
    if (!refs.emplace(std::move(id), std::move(text)).second) {
      throw ValidationError(context + ": duplicate utterance_id");
    }
  }
  return refs;
}

void write_report_json(const EvalReport& report, std::ostream& out) {
  nlohmann::json per = nlohmann::json::array();
  for (const UtteranceEval& u : report.per_utterance) {
    per.push_back({{"utterance_id", u.utterance_id},
                   {"wer_baseline", u.wer_baseline},
                   {"wer_rescored", u.wer_rescored}});
  }
  const nlohmann::json j{{"aggregate_baseline", report.aggregate_baseline},
                         {"aggregate_rescored", report.aggregate_rescored},
                         {"delta", report.delta},
                         {"per_utterance", std::move(per)}};
  out << j.dump(2) << '\n';
}

}  // namespace lexboost
