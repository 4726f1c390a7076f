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

#include <string>
#include <vector>

namespace lexboost::cli {

// Entry point behind the `lexboost` binary. Subcommands: build-rf, fit,
// plot-data, rescore, eval.
//
// Exit status: 0 success, 1 I/O failure, 2 validation or configuration
// error. Errors go to stderr as a single `error: ...` line. Outputs are
// written atomically and are byte-identical across runs on identical
// inputs.
int run(int argc, const char* const* argv);

// Same, for in-process callers; `args` excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace lexboost::cli
