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
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attagree/model.hpp"

// Top-k token selection.
//
// Fixed k takes the k highest scores (ties go to the lower index). Dynamic k
// keeps the tokens that are (a) strict local maxima within a +-window
// neighbourhood and (b) strictly above a profile-level threshold. Windows are
// truncated at the sequence edges, so edge tokens compare only against the
// neighbours that exist; plateaus never produce a peak.

namespace attagree {

// Ascending, duplicate-free token (or span) indices.
using IndexSet = std::vector<std::size_t>;

struct TopKSelection {
  std::string method;
  IndexSet indices;

  std::size_t k() const noexcept { return indices.size(); }
};

struct ThresholdValue {
  ThresholdKind kind = ThresholdKind::kMean;
  bool positive_only = false;
  // nullopt when positive_only is set and no score is strictly positive.
  std::optional<double> value;
};

inline IndexSet select_fixed_indices(std::span<const double> scores, std::size_t k) {
  IndexSet order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return a < b;
                    });
  order.resize(take);
  std::sort(order.begin(), order.end());
  return order;
}

inline TopKSelection select_fixed(const AttributionProfile& profile, std::size_t k) {
  return {profile.method, select_fixed_indices(profile.scores, k)};
}

// Statistic of the scores (or of the strictly positive ones). Standard
// deviation is the population one.
inline std::optional<double> threshold_of(std::span<const double> scores,
                                          ThresholdKind kind, bool positive_only) {
  std::vector<double> values;
  values.reserve(scores.size());
  for (double s : scores) {
    if (!positive_only || s > 0.0) values.push_back(s);
  }
  if (values.empty()) return std::nullopt;

  const double n = static_cast<double>(values.size());
  if (kind == ThresholdKind::kMedian) {
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    const double lower =
        *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
  }

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  if (kind == ThresholdKind::kMean) return mean;

  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  const double sd = std::sqrt(sq / n);
  switch (kind) {
    case ThresholdKind::kMeanPlusSd:
      return mean + sd;
    case ThresholdKind::kMeanPlus2Sd:
      return mean + 2.0 * sd;
    case ThresholdKind::kMeanMinusSd:
      return mean - sd;
    case ThresholdKind::kMeanMinus2Sd:
      return mean - 2.0 * sd;
    default:
      return mean;
  }
}

inline ThresholdValue compute_threshold(const AttributionProfile& profile,
                                        ThresholdKind kind, bool positive_only) {
  return {kind, positive_only, threshold_of(profile.scores, kind, positive_only)};
}

// Indices whose score is strictly greater than every other score within
// `window` positions.
inline IndexSet local_peaks(std::span<const double> scores, std::size_t window = 1) {
  IndexSet peaks;
  const std::size_t n = scores.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= window ? i - window : 0;
    const std::size_t hi = std::min(n - 1, i + window);
    bool peak = true;
    for (std::size_t j = lo; j <= hi && peak; ++j) {
      if (j != i && !(scores[i] > scores[j])) peak = false;
    }
    if (peak) peaks.push_back(i);
  }
  return peaks;
}

inline IndexSet local_peaks(const AttributionProfile& profile, std::size_t window = 1) {
  return local_peaks(std::span<const double>(profile.scores), window);
}

inline IndexSet select_dynamic_indices(std::span<const double> scores, const DynamicK& d) {
  const auto cut = threshold_of(scores, d.threshold, d.positive_only);
  if (!cut) return {};
  IndexSet out;
  for (std::size_t i : local_peaks(scores, d.window)) {
    if (scores[i] > *cut) out.push_back(i);
  }
  return out;
}

inline TopKSelection select_dynamic(const AttributionProfile& profile,
                                    const KPolicy& policy) {
  if (!policy.is_dynamic()) {
    throw ConfigError("select_dynamic requires a dynamic policy, got " +
                      policy.to_string());
  }
  return {profile.method, select_dynamic_indices(profile.scores, policy.as_dynamic())};
}

inline IndexSet select_indices(std::span<const double> scores, const KPolicy& policy) {
  if (policy.is_fixed()) return select_fixed_indices(scores, policy.as_fixed().k);
  return select_dynamic_indices(scores, policy.as_dynamic());
}

// Selection over a named profile or the human rationale vector.
inline TopKSelection select(const Instance& inst, std::string_view name,
                            const KPolicy& policy) {
  return {std::string(name), select_indices(scores_for(inst, name), policy)};
}

}  // namespace attagree
