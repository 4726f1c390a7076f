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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lexboost {

// %.17g: enough significant digits that parsing the text recovers the
// exact double, locale-independent.
std::string format_double_17(double value);

// Parses a full field as a double (no trailing junk). ParseError on
// failure; `context` names the offending location in the message.
double parse_double_field(std::string_view field, const std::string& context);

// Minimal RFC-4180 CSV: fields holding a comma, quote, or newline are
// quoted with embedded quotes doubled.
std::string csv_escape(std::string_view field);
std::vector<std::string> split_csv_line(std::string_view line,
                                        const std::string& context);

// Whole-file helpers. IoError on any filesystem failure.
std::string read_file(const std::filesystem::path& path);
// Writes to `<path>.tmp` in the same directory, then renames over the
// target, so readers never observe a half-written file.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace lexboost
