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

#include "lexboost/text_norm.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>

namespace lexboost {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  // getNFCInstance only fails on a broken ICU data install.
  if (U_FAILURE(status) || n == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *n;
}

bool is_word_char(UChar32 cp) { return u_isalnum(cp); }

}  // namespace

std::optional<std::string> normalize_token(std::string_view raw) {
  if (raw.empty()) return std::nullopt;

  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));

  // Root locale keeps lowercasing independent of the host environment.
  // Lowercasing first, then composing, makes the function idempotent
  // even for special casings that expand to combining sequences.
  u.toLower(icu::Locale::getRoot());

  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = nfc().normalize(u, status);
  if (U_FAILURE(status)) return std::nullopt;

  int32_t begin = 0;
  int32_t end = composed.length();
  while (begin < end) {
    const UChar32 cp = composed.char32At(begin);
    if (is_word_char(cp)) break;
    begin = composed.moveIndex32(begin, 1);
  }
  while (end > begin) {
    const int32_t prev = composed.moveIndex32(end, -1);
    if (is_word_char(composed.char32At(prev))) break;
    end = prev;
  }
  if (begin >= end) return std::nullopt;

  std::string out;
  composed.tempSubStringBetween(begin, end).toUTF8String(out);
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t len = static_cast<int32_t>(text.size());

  int32_t i = 0;
  int32_t piece_start = -1;
  while (i < len) {
    const int32_t cp_start = i;
    UChar32 cp;
    U8_NEXT(bytes, i, len, cp);
    const bool ws = cp >= 0 && u_isUWhiteSpace(cp);
    if (ws) {
      if (piece_start >= 0) {
        if (auto tok = normalize_token(
                text.substr(piece_start, cp_start - piece_start))) {
          tokens.push_back(std::move(*tok));
        }
        piece_start = -1;
      }
    } else if (piece_start < 0) {
      piece_start = cp_start;
    }
  }
  if (piece_start >= 0) {
    if (auto tok = normalize_token(text.substr(piece_start))) {
      tokens.push_back(std::move(*tok));
    }
  }
  return tokens;
}

}  // namespace lexboost
