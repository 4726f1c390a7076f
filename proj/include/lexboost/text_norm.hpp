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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexboost {

// One normalization policy is shared by every text consumer in the
// toolkit (corpus words, OCR dumps, hypothesis text, references), so a
// word always compares equal to itself no matter which side it entered
// from.
//
// Policy: Unicode NFC, lowercased with the root locale, leading and
// trailing non-alphanumeric code points stripped. Interior characters
// (hyphens, apostrophes, digits) are kept, so "x86-64" and "don't"
// survive intact.

// Returns the normalized token, or nullopt when nothing is left after
// stripping (e.g. "--").
std::optional<std::string> normalize_token(std::string_view raw);

// Splits on Unicode whitespace and normalizes each piece; empty results
// are dropped. Order is preserved.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace lexboost
