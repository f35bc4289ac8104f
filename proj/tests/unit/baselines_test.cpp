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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "attagree/baselines.hpp"
#include "test_util.hpp"

namespace attagree {
namespace {

using testing::make_instance;

// Exact expectation by enumerating every pair of `ones`-subsets of [0, n).
double enumerated_expectation(std::size_t n, std::size_t ones) {
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == ones) subsets.push_back(mask);
  }
  double sum = 0.0;
  for (auto a : subsets) {
    for (auto b : subsets) {
      const double both = __builtin_popcount(a & b);
      const double either = __builtin_popcount(a | b);
      // Union members: shared ones have relevance 1, the rest 1/2.
      sum += (both + 0.5 * (either - both)) / either;
    }
  }
  return sum / static_cast<double>(subsets.size() * subsets.size());
}

TEST(Rng, KnownHashes) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_NE(instance_seed(1, "x"), instance_seed(2, "x"));
  EXPECT_NE(instance_seed(1, "x"), instance_seed(1, "y"));
}

TEST(Rng, ShuffleIsUniformOverPermutations) {
  Rng rng(41);
  std::map<std::vector<int>, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    std::vector<int> v = {0, 1, 2};
    shuffle(std::span<int>(v), rng);
    ++counts[v];
  }
  ASSERT_EQ(counts.size(), 6u);
  double stat = 0;
  for (const auto& [perm, c] : counts) stat += std::pow(c - draws / 6.0, 2) / (draws / 6.0);
  // 99.9% quantile of chi-square with 5 df.
  EXPECT_LT(stat, 20.52);
}

TEST(Rng, UniformBelowStaysInRange) {
  Rng rng(43);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, (1ULL << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, bound), bound);
  }
}

TEST(RandomVectors, DeterministicForSeed) {
  RandomVectorSpec spec{100, 16, 200, 5};
  EXPECT_EQ(random_vector_baseline(spec), random_vector_baseline(spec));
  auto other = spec;
  other.seed = 6;
  EXPECT_NE(random_vector_baseline(spec), random_vector_baseline(other));
}

TEST(RandomVectors, AllOnesAgreePerfectly) {
  EXPECT_DOUBLE_EQ(random_vector_baseline({10, 10, 50, 1}), 1.0);
  EXPECT_NEAR(expected_random_vector_agreement(10, 10), 1.0, 1e-12);
}

TEST(RandomVectors, ExpectationMatchesEnumeration) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t ones = 1; ones <= n; ++ones) {
      EXPECT_NEAR(expected_random_vector_agreement(n, ones), enumerated_expectation(n, ones),
                  1e-10)
          << n << " " << ones;
    }
  }
}

TEST(RandomVectors, MonteCarloConvergesToExpectation) {
  const double mc = random_vector_baseline({40, 8, 40000, 3});
  EXPECT_NEAR(mc, expected_random_vector_agreement(40, 8), 0.003);
}

TEST(RandomVectors, RejectsBadSpec) {
  EXPECT_THROW(random_vector_baseline({10, 0, 5, 0}), ConfigError);
  EXPECT_THROW(random_vector_baseline({10, 11, 5, 0}), ConfigError);
  EXPECT_THROW(random_vector_baseline({10, 3, 0, 0}), ConfigError);
  EXPECT_THROW(ones_for_fraction(0.0, 10), ConfigError);
  EXPECT_EQ(ones_for_fraction(0.16, 100), 16u);
  EXPECT_EQ(ones_for_fraction(0.001, 100), 1u);
}

TEST(ShuffleBaseline, ConstantProfilesAreUndefined) {
  Corpus c;
  c.methods = {"M"};
  c.instances.push_back(make_instance("a", 5, {{"M", {0.3, 0.3, 0.3, 0.3, 0.3}}}));
  const auto b = shuffle_baseline(c, "M", KPolicy::dynamic(ThresholdKind::kMean), Level::kToken, 0);
  EXPECT_FALSE(b.value);
  EXPECT_EQ(b.skipped, 1u);
}

TEST(ShuffleBaseline, SelectingEverythingAgreesPerfectly) {
  std::mt19937_64 rng(47);
  auto c = testing::random_corpus(rng, 20, {"M"}, 2, 6);
  const auto b = shuffle_baseline(c, "M", KPolicy::fixed(6), Level::kToken, 9);
  EXPECT_DOUBLE_EQ(*b.value, 1.0);
}

TEST(ShuffleBaseline, IdentityPermutationAgreesPerfectly) {
  // Search seeds until the instance's shuffle leaves the scores in place.
  auto inst = make_instance("id", 3, {{"M", {0.1, 0.9, 0.5}}});
  Corpus c;
  c.methods = {"M"};
  c.instances.push_back(inst);
  std::uint64_t seed = 0;
  while (shuffled_scores(inst, "M", seed) != inst.profiles[0].scores) ++seed;
  const auto b = shuffle_baseline(c, "M", KPolicy::fixed(1), Level::kToken, seed);
  EXPECT_DOUBLE_EQ(*b.value, 1.0);
}

TEST(ShuffleBaseline, ShufflePreservesMultisetAndThresholds) {
  std::mt19937_64 rng(53);
  const auto c = testing::random_corpus(rng, 100, {"M"});
  for (const auto& inst : c.instances) {
    auto orig = inst.profiles[0].scores;
    auto shuf = shuffled_scores(inst, "M", 77);
    EXPECT_EQ(shuf, shuffled_scores(inst, "M", 77));
    for (auto kind : kAllThresholdKinds) {
      for (bool pos : {false, true}) {
        const auto a = threshold_of(orig, kind, pos);
        const auto b = threshold_of(shuf, kind, pos);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
          EXPECT_NEAR(*a, *b, 1e-12);
        }
      }
    }
    std::sort(orig.begin(), orig.end());
    std::sort(shuf.begin(), shuf.end());
    EXPECT_EQ(orig, shuf);
  }
}

TEST(ShuffleBaseline, ValueInUnitRangeAndSeedStable) {
  std::mt19937_64 rng(59);
  const auto c = testing::random_corpus(rng, 50, {"M"});
  for (auto level : {Level::kToken, Level::kSpan}) {
    const auto a = shuffle_baseline(c, "M", KPolicy::fixed(4), level, 3, 1);
    const auto b = shuffle_baseline(c, "M", KPolicy::fixed(4), level, 3, 3);
    EXPECT_EQ(*a.value, *b.value);
    EXPECT_GE(*a.value, 0.5);
    EXPECT_LE(*a.value, 1.0);
  }
  EXPECT_THROW(shuffle_baseline(c, "Z", KPolicy::fixed(4), Level::kToken, 0), ConfigError);
}

TEST(BeatsBaseline, DuplicateMethodHasMaxOne) {
  std::mt19937_64 rng(61);
  auto c = testing::random_corpus(rng, 40, {"A", "B"});
  c.methods.push_back("A2");
  for (auto& inst : c.instances) inst.profiles.push_back({"A2", inst.profiles[0].scores});
  const auto rows = beats_baseline_report(c, {"A", "B", "A2"}, KPolicy::fixed(4), Level::kToken, 1);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_DOUBLE_EQ(*rows[0].max_agreement, 1.0);
  EXPECT_EQ(rows[0].max_partner, "A2");
  EXPECT_EQ(rows[1].method, "B");
  EXPECT_LE(*rows[1].min_agreement, *rows[1].max_agreement);
}

// Instance whose dynamic selections under mean (all scores) have exactly k peaks.
Instance peaks_instance(const std::string& id, std::size_t k) {
  std::vector<double> s(2 * k + 1, 0.0);
  for (std::size_t i = 0; i < k; ++i) s[2 * i + 1] = 1.0;
  return make_instance(id, s.size(), {{"M", s}});
}

TEST(ThresholdBenchmark, PopulationSdAndDistance) {
  Corpus c;
  c.methods = {"M"};
  c.instances = {peaks_instance("a", 1), peaks_instance("b", 7)};
  const auto kd = k_distribution(c, "M", ThresholdKind::kMean, false);
  EXPECT_DOUBLE_EQ(kd.mean_k, 4.0);
  EXPECT_DOUBLE_EQ(kd.sd_k, 3.0);
  const auto bench = threshold_benchmark(c, {"M"}, 4.0, 3.0);
  EXPECT_EQ(bench.ranking.size(), 12u);
  EXPECT_EQ(bench.k_values.size(), 12u);
  EXPECT_DOUBLE_EQ(bench.ranking.front().distance, 0.0);
  for (std::size_t i = 1; i < bench.ranking.size(); ++i) {
    EXPECT_LE(bench.ranking[i - 1].distance, bench.ranking[i].distance);
  }
}

TEST(ThresholdBenchmark, DistanceAveragesOverMethods) {
  // Method A: k = 1 everywhere (mean 1, sd 0); B: k = 4 everywhere.
  Corpus c;
  c.methods = {"A", "B"};
  for (int i = 0; i < 3; ++i) {
    auto a = peaks_instance("i" + std::to_string(i), 4);
    std::vector<double> one(a.tokens.size(), 0.0);
    one[1] = 1.0;
    a.profiles = {{"A", one}, {"B", a.profiles[0].scores}};
    c.instances.push_back(a);
  }
  // Target (4, 4): A is at distance 5 (3-4-5), B at distance 4.
  EXPECT_DOUBLE_EQ(euclidean_distance(1, 0, 4, 4), 5.0);
  const auto bench = threshold_benchmark(c, {"A", "B"}, 4.0, 4.0);
  for (const auto& r : bench.ranking) {
    if (r.kind == ThresholdKind::kMean && !r.positive_only) {
      EXPECT_DOUBLE_EQ(r.distance, 4.5);
    }
  }
  EXPECT_THROW(threshold_benchmark(c, {}, 4, 3), ConfigError);
}

}  // namespace
}  // namespace attagree
