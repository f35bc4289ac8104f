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
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "attagree/agreement.hpp"
#include "attagree/chi2.hpp"
#include "attagree/model.hpp"
#include "attagree/selection.hpp"
#include "attagree/spanset.hpp"

// Word-class preferences of top-k selections: how often a method picks stop
// words, punctuation and each POS tag, and whether two methods differ
// significantly (Pearson chi-square on the 2 x C table of counts).

namespace attagree {

inline constexpr double kSignificanceLevel = 0.05;
inline constexpr std::size_t kDefaultPosTagCount = 5;

struct PreferenceProfile {
  std::string name;
  std::size_t total_selected = 0;
  std::size_t stop_count = 0;
  std::size_t punct_count = 0;
  // Every POS tag seen among the selected tokens.
  std::map<std::string, std::size_t> pos_counts;

  // Both ratios are 0 when nothing was selected.
  double stop_ratio() const {
    return total_selected ? static_cast<double>(stop_count) / static_cast<double>(total_selected)
                          : 0.0;
  }
  double punct_ratio() const {
    return total_selected ? static_cast<double>(punct_count) / static_cast<double>(total_selected)
                          : 0.0;
  }
  std::size_t pos_count(const std::string& tag) const {
    auto it = pos_counts.find(tag);
    return it == pos_counts.end() ? 0 : it->second;
  }
};

inline PreferenceProfile preference_profile(const Corpus& corpus, std::string_view name,
                                            const KPolicy& policy) {
  PreferenceProfile p{std::string(name)};
  for (const auto& inst : corpus.instances) {
    for (std::size_t i : select_indices(scores_for(inst, name), policy)) {
      const auto& t = inst.tokens[i];
      ++p.total_selected;
      if (t.is_stop) ++p.stop_count;
      if (t.is_punct) ++p.punct_count;
      ++p.pos_counts[t.pos];
    }
  }
  return p;
}

// The `count` tags most often selected in the human profile; ties go to the
// alphabetically smaller tag.
inline std::vector<std::string> top_pos_tags(const PreferenceProfile& profile,
                                             std::size_t count = kDefaultPosTagCount) {
  std::vector<std::pair<std::string, std::size_t>> tags(profile.pos_counts.begin(),
                                                        profile.pos_counts.end());
  std::stable_sort(tags.begin(), tags.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tags.size() && i < count; ++i) out.push_back(tags[i].first);
  return out;
}

inline std::vector<std::string> default_pos_tags(const Corpus& corpus, const KPolicy& policy,
                                                 std::size_t count = kDefaultPosTagCount) {
  return top_pos_tags(preference_profile(corpus, kHumanName, policy), count);
}

enum class WordClass { kStop, kPunct, kPos };

inline constexpr std::array<WordClass, 3> kAllWordClasses = {WordClass::kStop,
                                                             WordClass::kPunct,
                                                             WordClass::kPos};

inline std::string_view to_string(WordClass c) {
  switch (c) {
    case WordClass::kStop:
      return "stop";
    case WordClass::kPunct:
      return "punct";
    case WordClass::kPos:
      return "pos";
  }
  return "?";
}

struct Chi2Result {
  std::string first;
  std::string second;
  WordClass word_class = WordClass::kStop;
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  bool significant = false;
};

// Rows: the two profiles. Columns: in-class / out-of-class for stop words and
// punctuation; one column per tag in `pos_tags` for POS (other tags dropped).
inline std::vector<std::vector<double>> contingency_table(
    const PreferenceProfile& a, const PreferenceProfile& b, WordClass word_class,
    const std::vector<std::string>& pos_tags) {
  auto row = [&](const PreferenceProfile& p) {
    std::vector<double> r;
    switch (word_class) {
      case WordClass::kStop:
        r = {static_cast<double>(p.stop_count),
             static_cast<double>(p.total_selected - p.stop_count)};
        break;
      case WordClass::kPunct:
        r = {static_cast<double>(p.punct_count),
             static_cast<double>(p.total_selected - p.punct_count)};
        break;
      case WordClass::kPos:
        for (const auto& tag : pos_tags) r.push_back(static_cast<double>(p.pos_count(tag)));
        break;
    }
    return r;
  };
  return {row(a), row(b)};
}

inline Chi2Result chi2_pair(const PreferenceProfile& a, const PreferenceProfile& b,
                            WordClass word_class, const std::vector<std::string>& pos_tags = {},
                            bool yates = false) {
  if (word_class == WordClass::kPos && pos_tags.size() < 2) {
    throw ConfigError("POS chi-square needs at least 2 tags");
  }
  const auto stat = pearson_chi2(contingency_table(a, b, word_class, pos_tags), yates);
  return {a.name,      b.name,        word_class, stat.statistic,
          stat.df,     stat.p_value,  stat.p_value < kSignificanceLevel};
}

struct Chi2Entry {
  std::string first;
  std::string second;
  WordClass word_class = WordClass::kStop;
  std::optional<Chi2Result> result;
  std::string error;  // set when the table was degenerate
};

// Every unordered pair (in `names` order) times stop/punct/POS. Degenerate
// tables are reported per entry rather than aborting the batch.
inline std::vector<Chi2Entry> chi2_all_pairs(const Corpus& corpus,
                                             const std::vector<std::string>& names,
                                             const KPolicy& policy,
                                             const std::vector<std::string>& pos_tags,
                                             bool yates = false) {
  if (names.size() < 2) throw ConfigError("chi-square battery needs at least 2 names");
  check_names(corpus, names);
  std::vector<PreferenceProfile> profiles;
  for (const auto& n : names) profiles.push_back(preference_profile(corpus, n, policy));
  std::vector<Chi2Entry> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      for (auto wc : kAllWordClasses) {
        Chi2Entry e{names[i], names[j], wc};
        try {
          e.result = chi2_pair(profiles[i], profiles[j], wc, pos_tags, yates);
        } catch (const DegenerateTableError& err) {
          e.error = err.what();
        }
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Head/modifier alternation inside short noun phrases

struct AlternationQuery {
  std::string probe_first;
  std::string probe_second;
  std::vector<std::string> consensus;
  std::vector<std::string> pattern = {"DET", "NOUN"};
  std::string span_label = "NP";
  // Positions inside the pattern; defaults are the last (head) and first
  // (modifier) element.
  std::optional<std::size_t> head_position;
  std::optional<std::size_t> modifier_position;
};

struct AlternationReport {
  std::vector<std::string> pattern;
  std::string probe_first;
  std::string probe_second;
  std::size_t head_position = 0;
  std::size_t modifier_position = 0;
  // NP spans of the pattern's length that every consensus method targets.
  std::size_t candidate_spans = 0;
  // Candidates whose POS sequence equals the pattern.
  std::size_t matched_spans = 0;
  // [p]: matched spans where the probe selects the token at pattern position p.
  std::vector<std::size_t> first_targets;
  std::vector<std::size_t> second_targets;
  // [p][q]: first probe selects position p and second probe selects q.
  std::vector<std::vector<std::size_t>> joint;
  // joint[head][modifier].
  std::size_t alternations = 0;
  // Selected tokens / all tokens, pooled over matched spans.
  double first_in_span_ratio = 0.0;
  double second_in_span_ratio = 0.0;
};

inline AlternationReport np_alternation(const Corpus& corpus, const AlternationQuery& q,
                                        const KPolicy& policy) {
  const std::size_t len = q.pattern.size();
  if (len < 2) throw ConfigError("alternation pattern needs at least 2 tags");
  std::vector<std::string> names = {q.probe_first, q.probe_second};
  names.insert(names.end(), q.consensus.begin(), q.consensus.end());
  check_names(corpus, names);

  AlternationReport r;
  r.pattern = q.pattern;
  r.probe_first = q.probe_first;
  r.probe_second = q.probe_second;
  r.head_position = q.head_position.value_or(len - 1);
  r.modifier_position = q.modifier_position.value_or(0);
  if (r.head_position >= len || r.modifier_position >= len) {
    throw ConfigError("alternation positions must lie inside the pattern");
  }
  r.first_targets.assign(len, 0);
  r.second_targets.assign(len, 0);
  r.joint.assign(len, std::vector<std::size_t>(len, 0));

  std::size_t tokens_in_matched = 0, first_selected = 0, second_selected = 0;
  for (const auto& inst : corpus.instances) {
    std::vector<IndexSet> consensus_spans;
    for (const auto& c : q.consensus) {
      consensus_spans.push_back(
          targeted_span_indices(inst, select_indices(scores_for(inst, c), policy)));
    }
    const auto first = select_indices(scores_for(inst, q.probe_first), policy);
    const auto second = select_indices(scores_for(inst, q.probe_second), policy);
    auto has = [](const IndexSet& s, std::size_t x) {
      return std::binary_search(s.begin(), s.end(), x);
    };

    for (std::size_t j = 0; j < inst.spans.size(); ++j) {
      const auto& span = inst.spans[j];
      if (span.label != q.span_label || span.size() != len) continue;
      bool agreed = std::all_of(consensus_spans.begin(), consensus_spans.end(),
                                [&](const IndexSet& s) { return has(s, j); });
      if (!agreed) continue;
      ++r.candidate_spans;
      bool matches = true;
      for (std::size_t p = 0; p < len && matches; ++p) {
        matches = inst.tokens[span.start + p].pos == q.pattern[p];
      }
      if (!matches) continue;
      ++r.matched_spans;
      tokens_in_matched += len;
      for (std::size_t p = 0; p < len; ++p) {
        const bool a = has(first, span.start + p);
        const bool b = has(second, span.start + p);
        r.first_targets[p] += a;
        r.second_targets[p] += b;
        first_selected += a;
        second_selected += b;
        if (!a) continue;
        for (std::size_t qpos = 0; qpos < len; ++qpos) {
          r.joint[p][qpos] += has(second, span.start + qpos);
        }
      }
    }
  }
  r.alternations = r.joint[r.head_position][r.modifier_position];
  if (tokens_in_matched > 0) {
    r.first_in_span_ratio =
        static_cast<double>(first_selected) / static_cast<double>(tokens_in_matched);
    r.second_in_span_ratio =
        static_cast<double>(second_selected) / static_cast<double>(tokens_in_matched);
  }
  return r;
}

}  // namespace attagree
