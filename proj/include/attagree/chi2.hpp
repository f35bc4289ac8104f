// Copyright 2026 The attagree Authors.
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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "attagree/error.hpp"

namespace attagree {

// P(X > statistic) for X ~ chi-square(df).
inline double chi2_survival(double statistic, double df) {
  if (!(df > 0.0)) throw ConfigError("chi-square df must be positive");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(df / 2.0, statistic / 2.0);
}

struct Chi2Statistic {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
};

// Pearson chi-square test of independence on an R x C table of counts.
// With `yates`, 2 x 2 tables use |O - E| - 0.5 (floored at 0); larger tables
// are unaffected.
inline Chi2Statistic pearson_chi2(const std::vector<std::vector<double>>& counts,
                                  bool yates = false) {
  const std::size_t rows = counts.size();
  if (rows < 2) throw ConfigError("contingency table needs at least 2 rows");
  const std::size_t cols = counts.front().size();
  if (cols < 2) throw ConfigError("contingency table needs at least 2 columns");
  std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
  double total = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (counts[r].size() != cols) throw ConfigError("ragged contingency table");
    for (std::size_t c = 0; c < cols; ++c) {
      if (counts[r][c] < 0.0) throw ConfigError("negative count in contingency table");
      row_sum[r] += counts[r][c];
      col_sum[c] += counts[r][c];
      total += counts[r][c];
    }
  }
  const bool correct = yates && rows == 2 && cols == 2;
  Chi2Statistic out;
  out.df = static_cast<int>((rows - 1) * (cols - 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double expected = total > 0.0 ? row_sum[r] * col_sum[c] / total : 0.0;
      if (!(expected > 0.0)) throw DegenerateTableError(r, c);
      double diff = std::abs(counts[r][c] - expected);
      if (correct) diff = std::max(0.0, diff - 0.5);
      out.statistic += diff * diff / expected;
    }
  }
  out.p_value = chi2_survival(out.statistic, out.df);
  return out;
}

}  // namespace attagree
