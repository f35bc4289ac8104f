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
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "attagree/agreement.hpp"
#include "attagree/model.hpp"
#include "attagree/parallel.hpp"
#include "attagree/random.hpp"
#include "attagree/selection.hpp"
#include "attagree/spanset.hpp"

namespace attagree {

// ---------------------------------------------------------------------------
// Random binary vectors

struct RandomVectorSpec {
  std::size_t length = 100;
  std::size_t ones = 16;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;

  void validate() const {
    if (length == 0) throw ConfigError("random vector length must be >= 1");
    if (ones == 0 || ones > length) {
      throw ConfigError("ones must be in [1, length]");
    }
    if (trials == 0) throw ConfigError("trials must be >= 1");
  }
};

// Mean agreement between two independently shuffled binary vectors with
// `ones` set positions each, over `trials` draws.
inline double random_vector_baseline(const RandomVectorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<char> base(spec.length, 0);
  std::fill_n(base.begin(), spec.ones, 1);
  auto positions = [](const std::vector<char>& v) {
    IndexSet out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i]) out.push_back(i);
    }
    return out;
  };
  double sum = 0.0;
  for (std::size_t t = 0; t < spec.trials; ++t) {
    auto a = base;
    auto b = base;
    shuffle(std::span<char>(a), rng);
    shuffle(std::span<char>(b), rng);
    sum += *agreement_at_k(positions(a), positions(b));
  }
  return sum / static_cast<double>(spec.trials);
}

// Exact expectation of the above: with X ~ Hypergeometric(length, ones, ones)
// overlapping positions, agreement is ones / (2 ones - X).
inline double expected_random_vector_agreement(std::size_t length, std::size_t ones) {
  if (ones == 0 || ones > length) throw ConfigError("ones must be in [1, length]");
  auto log_choose = [](double n, double k) {
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
  };
  const double n = static_cast<double>(length);
  const double k = static_cast<double>(ones);
  const std::size_t lo = 2 * ones > length ? 2 * ones - length : 0;
  double e = 0.0;
  for (std::size_t x = lo; x <= ones; ++x) {
    const double xd = static_cast<double>(x);
    const double p =
        std::exp(log_choose(k, xd) + log_choose(n - k, k - xd) - log_choose(n, k));
    e += p * k / (2.0 * k - xd);
  }
  return e;
}

// Ones-count for a length-`length` vector reproducing a highlight fraction
// (e.g. mean selected tokens / sentence length from span_stats).
inline std::size_t ones_for_fraction(double fraction, std::size_t length) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw ConfigError("highlight fraction must be in (0, 1]");
  }
  const auto ones = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(length)));
  return std::clamp<std::size_t>(ones, 1, length);
}

// ---------------------------------------------------------------------------
// Per-method shuffle baseline

inline std::vector<double> shuffled_scores(const Instance& inst, std::string_view name,
                                           std::uint64_t seed) {
  auto scores = scores_for(inst, name);
  std::vector<double> out(scores.begin(), scores.end());
  Rng rng(instance_seed(seed, inst.id));
  shuffle(std::span<double>(out), rng);
  return out;
}

// Agreement between each instance's selection and the selection on a
// randomly permuted copy of the same scores, averaged over the corpus.
inline MeanAgreement shuffle_baseline(const Corpus& corpus, std::string_view method,
                                      const KPolicy& policy, Level level,
                                      std::uint64_t seed, std::size_t jobs = 1) {
  if (method != kHumanName && !corpus.has_method(method)) {
    throw ConfigError("unknown method '" + std::string(method) + "'");
  }
  std::vector<std::optional<double>> per_instance(corpus.instances.size());
  parallel_for(corpus.instances.size(), jobs, [&](std::size_t i) {
    const auto& inst = corpus.instances[i];
    IndexSet original = select_indices(scores_for(inst, method), policy);
    IndexSet shuffled = select_indices(shuffled_scores(inst, method, seed), policy);
    if (level == Level::kSpan) {
      original = targeted_span_indices(inst, original);
      shuffled = targeted_span_indices(inst, shuffled);
    }
    per_instance[i] = agreement_at_k(original, shuffled);
  });
  return mean_of_defined(per_instance);
}

struct BaselineRow {
  std::string method;
  MeanAgreement baseline;
  std::optional<double> min_agreement;
  std::optional<double> max_agreement;
  std::string min_partner;
  std::string max_partner;

  bool min_below_baseline() const {
    return baseline.value && min_agreement && *min_agreement < *baseline.value;
  }
  bool max_below_baseline() const {
    return baseline.value && max_agreement && *max_agreement < *baseline.value;
  }
};

// For each method: its shuffle baseline and the range of its agreement with
// the other methods. A threshold is doing its job when every method agrees
// with its peers more than with its own shuffled profile.
inline std::vector<BaselineRow> beats_baseline_report(const Corpus& corpus,
                                                      const std::vector<std::string>& methods,
                                                      const KPolicy& policy, Level level,
                                                      std::uint64_t seed,
                                                      std::size_t jobs = 1) {
  if (methods.size() < 2) throw ConfigError("baseline report needs at least 2 methods");
  const auto matrix = pairwise_matrix(corpus, methods, level, policy, jobs);
  std::vector<BaselineRow> rows;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    BaselineRow row{methods[i], shuffle_baseline(corpus, methods[i], policy, level, seed, jobs)};
    for (std::size_t j = 0; j < methods.size(); ++j) {
      if (i == j) continue;
      const auto& v = matrix.at(i, j);
      if (!v) continue;
      if (!row.min_agreement || *v < *row.min_agreement) {
        row.min_agreement = *v;
        row.min_partner = methods[j];
      }
      if (!row.max_agreement || *v > *row.max_agreement) {
        row.max_agreement = *v;
        row.max_partner = methods[j];
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Threshold benchmark

struct KDistribution {
  std::string method;
  ThresholdKind kind = ThresholdKind::kMean;
  bool positive_only = false;
  double mean_k = 0.0;
  double sd_k = 0.0;  // population standard deviation over instances
};

struct ThresholdDistance {
  ThresholdKind kind = ThresholdKind::kMean;
  bool positive_only = false;
  double distance = 0.0;  // mean over methods of the (mean, sd) distance
};

struct ThresholdBenchmark {
  double target_mean = 4.0;
  double target_sd = 3.0;
  std::size_t window = 1;
  // Ordered by positive_only, then threshold kind, then method.
  std::vector<KDistribution> k_values;
  // Ascending by distance; ties keep the (positive_only, kind) order.
  std::vector<ThresholdDistance> ranking;
};

inline double euclidean_distance(double mean_k, double sd_k, double target_mean,
                                 double target_sd) {
  return std::hypot(mean_k - target_mean, sd_k - target_sd);
}

inline KDistribution k_distribution(const Corpus& corpus, const std::string& method,
                                    ThresholdKind kind, bool positive_only,
                                    std::size_t window = 1) {
  KDistribution out{method, kind, positive_only};
  if (corpus.instances.empty()) return out;
  const DynamicK policy{kind, positive_only, window};
  std::vector<double> ks;
  ks.reserve(corpus.instances.size());
  for (const auto& inst : corpus.instances) {
    ks.push_back(static_cast<double>(select_dynamic_indices(scores_for(inst, method), policy).size()));
  }
  const double n = static_cast<double>(ks.size());
  double sum = 0.0;
  for (double k : ks) sum += k;
  out.mean_k = sum / n;
  double sq = 0.0;
  for (double k : ks) sq += (k - out.mean_k) * (k - out.mean_k);
  out.sd_k = std::sqrt(sq / n);
  return out;
}

inline ThresholdBenchmark threshold_benchmark(const Corpus& corpus,
                                              const std::vector<std::string>& methods,
                                              double target_mean, double target_sd,
                                              std::size_t window = 1) {
  if (methods.empty()) throw ConfigError("threshold benchmark needs at least 1 method");
  check_names(corpus, methods);
  ThresholdBenchmark out{target_mean, target_sd, window};
  for (bool positive_only : {false, true}) {
    for (auto kind : kAllThresholdKinds) {
      double total = 0.0;
      for (const auto& m : methods) {
        auto kd = k_distribution(corpus, m, kind, positive_only, window);
        total += euclidean_distance(kd.mean_k, kd.sd_k, target_mean, target_sd);
        out.k_values.push_back(std::move(kd));
      }
      out.ranking.push_back({kind, positive_only, total / static_cast<double>(methods.size())});
    }
  }
  std::stable_sort(out.ranking.begin(), out.ranking.end(),
                   [](const auto& a, const auto& b) { return a.distance < b.distance; });
  return out;
}

}  // namespace attagree
