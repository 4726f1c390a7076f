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

#include <stdexcept>
#include <string>

namespace lexboost {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (bad line, bad JSON, bad CSV field).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but violates a contract (empty pool, duplicate
// word, no LTD overlap, too few fit points, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad configuration: invalid flag combination, non-negative slope, ...
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure: cannot open, read, write, or rename.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexboost
