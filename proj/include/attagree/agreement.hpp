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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attagree/model.hpp"
#include "attagree/parallel.hpp"
#include "attagree/selection.hpp"
#include "attagree/spanset.hpp"

// Relevance and agreement@k.
//
// For m selections over a universe of n units (tokens or spans), the
// relevance of a unit is the fraction of selections containing it. Agreement
// is the mean relevance over units that at least one selection contains; it
// lies in [1/m, 1] and is undefined when every selection is empty. Two
// disjoint selections of equal size score 0.5; identical ones score 1.

namespace attagree {

enum class Level { kToken, kSpan };

inline std::string_view to_string(Level level) {
  return level == Level::kToken ? "token" : "span";
}

inline Level parse_level(std::string_view s) {
  if (s == "token") return Level::kToken;
  if (s == "span") return Level::kSpan;
  throw ConfigError("unknown level '" + std::string(s) + "' (expected token|span)");
}

inline std::vector<double> relevance(std::span<const IndexSet> selections,
                                     std::size_t unit_count) {
  std::vector<double> r(unit_count, 0.0);
  if (selections.empty()) return r;
  std::vector<std::size_t> hits(unit_count, 0);
  for (const auto& sel : selections) {
    for (std::size_t u : sel) ++hits[u];
  }
  const auto m = static_cast<double>(selections.size());
  for (std::size_t u = 0; u < unit_count; ++u) r[u] = static_cast<double>(hits[u]) / m;
  return r;
}

inline std::optional<double> agreement_at_k(std::span<const IndexSet> selections,
                                            std::size_t unit_count) {
  if (selections.empty()) return std::nullopt;
  std::vector<std::size_t> hits(unit_count, 0);
  std::size_t total = 0;
  std::size_t covered = 0;
  for (const auto& sel : selections) {
    for (std::size_t u : sel) {
      if (hits[u]++ == 0) ++covered;
      ++total;
    }
  }
  if (covered == 0) return std::nullopt;
  // sum_u r(u) = total / m, divided by the number of units with r(u) > 0.
  return static_cast<double>(total) /
         (static_cast<double>(selections.size()) * static_cast<double>(covered));
}

// Two-selection form used by every pairwise computation.
inline std::optional<double> agreement_at_k(const IndexSet& a, const IndexSet& b) {
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t covered = a.size() + b.size() - common;
  if (covered == 0) return std::nullopt;
  return static_cast<double>(a.size() + b.size()) / (2.0 * static_cast<double>(covered));
}

inline std::optional<double> agreement_at_k(std::span<const TopKSelection> selections,
                                            std::size_t unit_count) {
  std::vector<IndexSet> sets;
  sets.reserve(selections.size());
  for (const auto& s : selections) sets.push_back(s.indices);
  return agreement_at_k(std::span<const IndexSet>(sets), unit_count);
}

// Dataset mean over instances where agreement is defined.
struct MeanAgreement {
  std::optional<double> value;
  std::size_t used = 0;
  std::size_t skipped = 0;
  // Why value is missing, empty otherwise.
  std::string note;
};

// Left-to-right mean of the defined entries.
inline MeanAgreement mean_of_defined(std::span<const std::optional<double>> values) {
  MeanAgreement out;
  double sum = 0.0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++out.used;
    } else {
      ++out.skipped;
    }
  }
  if (values.empty()) {
    out.note = "empty corpus";
  } else if (out.used == 0) {
    out.note = "agreement undefined on every instance (all selections empty)";
  } else {
    out.value = sum / static_cast<double>(out.used);
  }
  return out;
}

// Selection of one name on every instance at the requested level.
inline std::vector<IndexSet> corpus_selections(const Corpus& corpus, std::string_view name,
                                               Level level, const KPolicy& policy,
                                               std::size_t jobs = 1) {
  std::vector<IndexSet> out(corpus.instances.size());
  parallel_for(corpus.instances.size(), jobs, [&](std::size_t i) {
    const auto& inst = corpus.instances[i];
    IndexSet tokens = select_indices(scores_for(inst, name), policy);
    out[i] = level == Level::kToken ? std::move(tokens)
                                    : targeted_span_indices(inst, tokens);
  });
  return out;
}

inline MeanAgreement mean_agreement(const std::vector<IndexSet>& a,
                                    const std::vector<IndexSet>& b) {
  std::vector<std::optional<double>> per_instance(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) per_instance[i] = agreement_at_k(a[i], b[i]);
  return mean_of_defined(per_instance);
}

inline MeanAgreement mean_agreement(const Corpus& corpus, std::string_view first,
                                    std::string_view second, Level level,
                                    const KPolicy& policy, std::size_t jobs = 1) {
  return mean_agreement(corpus_selections(corpus, first, level, policy, jobs),
                        corpus_selections(corpus, second, level, policy, jobs));
}

struct AgreementMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<MeanAgreement>> cells;
  Level level = Level::kToken;
  KPolicy policy = KPolicy::fixed(4);

  const std::optional<double>& at(std::size_t i, std::size_t j) const {
    return cells[i][j].value;
  }
};

inline void check_names(const Corpus& corpus, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (n != kHumanName && !corpus.has_method(n)) {
      throw ConfigError("unknown method '" + n + "'");
    }
  }
}

inline AgreementMatrix pairwise_matrix(const Corpus& corpus,
                                       const std::vector<std::string>& names, Level level,
                                       const KPolicy& policy, std::size_t jobs = 1) {
  if (names.size() < 2) throw ConfigError("pairwise_matrix needs at least 2 names");
  check_names(corpus, names);
  std::vector<std::vector<IndexSet>> sel;
  sel.reserve(names.size());
  for (const auto& n : names) sel.push_back(corpus_selections(corpus, n, level, policy, jobs));

  AgreementMatrix m{names, {}, level, policy};
  m.cells.assign(names.size(), std::vector<MeanAgreement>(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i; j < names.size(); ++j) {
      m.cells[i][j] = mean_agreement(sel[i], sel[j]);
      m.cells[j][i] = m.cells[i][j];
    }
  }
  return m;
}

}  // namespace attagree
