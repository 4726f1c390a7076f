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

#include "lexboost/ocr_pool.hpp"

#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lexboost/errors.hpp"
#include "lexboost/text_norm.hpp"

namespace lexboost {

WordPool build_pool(std::span<const OcrDocument> docs) {
  WordPool pool;
  for (const auto& doc : docs) {
    for (auto& token : tokenize(doc.text)) {
      ++pool.counts[std::move(token)];
      ++pool.total_tokens;
    }
  }
  if (pool.total_tokens == 0) {
    throw ValidationError("empty RF word pool: no usable tokens in input");
  }
  return pool;
}

double lecture_frequency(const WordPool& pool, std::string_view word) {
  const auto it = pool.counts.find(std::string(word));
  if (it == pool.counts.end()) return 0.0;
  return static_cast<double>(it->second) /
         static_cast<double>(pool.total_tokens);
}

namespace {

OcrDocument parse_record(const std::string& line, std::size_t line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("OCR dump line " + std::to_string(line_no) +
                     ": invalid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("source") || !j.contains("text")) {
    throw ParseError("OCR dump line " + std::to_string(line_no) +
                     ": expected object with 'source' and 'text'");
  }
  OcrDocument doc;
  try {
    doc.source = j.at("source").get<std::string>();
    doc.timestamp_sec = j.value("timestamp_sec", 0.0);
    doc.text = j.at("text").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("OCR dump line " + std::to_string(line_no) +
                     ": bad field type: " + e.what());
  }
  if (doc.source.empty()) {
    throw ValidationError("OCR dump line " + std::to_string(line_no) +
                          ": 'source' must be non-empty");
  }
  if (doc.timestamp_sec < 0) {
    throw ValidationError("OCR dump line " + std::to_string(line_no) +
                          ": 'timestamp_sec' must be >= 0");
  }
  return doc;
}

bool looks_like_json_record(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  return j.is_object();
}

}  // namespace

std::vector<OcrDocument> read_ocr_dump(std::istream& in,
                                       const std::string& fallback_source) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }

  // Sniff the format off the first non-blank line.
  const std::string* first = nullptr;
  for (const auto& l : lines) {
    if (!l.empty()) {
      first = &l;
      break;
    }
  }

  std::vector<OcrDocument> docs;
  if (first != nullptr && looks_like_json_record(*first)) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      docs.push_back(parse_record(lines[i], i + 1));
    }
  } else {
    std::string whole;
    for (const auto& l : lines) {
      whole += l;
      whole += '\n';
    }
    docs.push_back(OcrDocument{fallback_source, 0.0, std::move(whole)});
  }
  return docs;
}

}  // namespace lexboost
