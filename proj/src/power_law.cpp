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

#include "lexboost/power_law.hpp"

#include <cmath>

#include "lexboost/errors.hpp"

namespace lexboost {

namespace {

double ols_slope(const std::vector<std::pair<double, double>>& points,
                 double mean_x, double mean_y) {
  double sxy = 0;
  double sxx = 0;
  for (const auto& [x, y] : points) {
    sxy += (x - mean_x) * (y - mean_y);
    sxx += (x - mean_x) * (x - mean_x);
  }
  if (sxx == 0.0) {
    throw ValidationError("degenerate fit: zero variance in x");
  }
  return sxy / sxx;
}

}  // namespace

PowerLawFit fit_loglog(const std::vector<std::pair<double, double>>& points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw ValidationError("power-law fit needs at least 3 points, got " +
                          std::to_string(n));
  }

  double mean_x = 0;
  double mean_y = 0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  PowerLawFit fit;
  fit.k = ols_slope(points, mean_x, mean_y);
  fit.intercept = mean_y - fit.k * mean_x;
  fit.n_points = static_cast<std::int64_t>(n);
  fit.dof = fit.n_points - 2;

  double ssr = 0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.intercept + fit.k * x);
    ssr += r * r;
  }
  fit.rse = std::sqrt(ssr / static_cast<double>(fit.dof));
  return fit;
}

namespace {

std::vector<std::pair<double, double>> logged_points(const RfTable& table,
                                                     bool exclude_sub_one,
                                                     bool natural_log) {
  std::vector<std::pair<double, double>> points;
  points.reserve(table.rows().size());
  for (const RfRow& row : table.rows()) {
    if (row.rf_raw <= 0.0) continue;
    if (exclude_sub_one && row.rf_raw < 1.0) continue;
    const double rank = static_cast<double>(row.rank);
    if (natural_log) {
      points.emplace_back(std::log(rank), std::log(row.rf_raw));
    } else {
      points.emplace_back(std::log10(rank), std::log10(row.rf_raw));
    }
  }
  return points;
}

}  // namespace

PowerLawFit fit_power_law(const RfTable& table, bool exclude_sub_one) {
  PowerLawFit fit = fit_loglog(logged_points(table, exclude_sub_one, false));

  // The slope must not depend on the logarithm base; refit with natural
  // logs and compare.
  const PowerLawFit ln_fit =
      fit_loglog(logged_points(table, exclude_sub_one, true));
  const double tol = 1e-12 * std::max(1.0, std::abs(fit.k));
  if (std::abs(fit.k - ln_fit.k) > tol) {
    throw ValidationError("power-law fit is log-base dependent: " +
                          std::to_string(fit.k) + " vs " +
                          std::to_string(ln_fit.k));
  }
  return fit;
}

std::vector<std::pair<double, double>> plot_points(const RfTable& table,
                                                   bool exclude_sub_one) {
  return logged_points(table, exclude_sub_one, false);
}

}  // namespace lexboost
