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
#include <utility>
#include <vector>

#include "lexboost/rf_model.hpp"

namespace lexboost {

// Least-squares line through log10(rf_raw) over log10(rank). The slope
// is the decay exponent of the rank-frequency curve; rse is the
// residual standard error at n - 2 degrees of freedom.
struct PowerLawFit {
  double k = 0;          // slope
  double intercept = 0;
  double rse = 0;
  std::int64_t dof = 0;  // n_points - 2
  std::int64_t n_points = 0;
  int log_base = 10;
};

// Ordinary least squares on already-logged (x, y) points. Fewer than 3
// points is a ValidationError, zero x-variance a degenerate fit.
PowerLawFit fit_loglog(const std::vector<std::pair<double, double>>& points);

// Fits over the table's rows. Rows keep their global rank as the
// x-coordinate; with `exclude_sub_one` rows with rf_raw < 1 are dropped
// (their ranks are not reassigned).
PowerLawFit fit_power_law(const RfTable& table, bool exclude_sub_one);

// The same filtered points, rank-ascending: (log10 rank, log10 rf_raw).
std::vector<std::pair<double, double>> plot_points(const RfTable& table,
                                                   bool exclude_sub_one);

}  // namespace lexboost
