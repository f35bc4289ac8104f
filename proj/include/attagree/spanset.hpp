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
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "attagree/model.hpp"
#include "attagree/selection.hpp"

namespace attagree {

struct SpanSelection {
  std::string method;
  IndexSet span_indices;

  std::size_t k() const noexcept { return span_indices.size(); }
};

// Index of the span holding `token`. Spans must partition the tokens.
inline std::size_t span_of(const Instance& inst, std::size_t token) {
  auto it = std::upper_bound(
      inst.spans.begin(), inst.spans.end(), token,
      [](std::size_t t, const Span& s) { return t < s.start; });
  return static_cast<std::size_t>(std::distance(inst.spans.begin(), it)) - 1;
}

// Spans that contain at least one selected token.
inline IndexSet targeted_span_indices(const Instance& inst, const IndexSet& tokens) {
  IndexSet out;
  for (std::size_t t : tokens) {
    const std::size_t j = span_of(inst, t);
    if (out.empty() || out.back() != j) out.push_back(j);
  }
  return out;
}

inline SpanSelection targeted_spans(const Instance& inst, const TopKSelection& sel) {
  return {sel.method, targeted_span_indices(inst, sel.indices)};
}

struct RangeStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct SelectionCounts {
  std::string name;
  double mean_tokens = 0.0;          // mean selected tokens per instance
  double mean_targeted_spans = 0.0;  // mean targeted spans per instance
  double token_fraction = 0.0;       // mean of selected / token count
  double span_fraction = 0.0;        // mean of targeted / span count
};

struct SpanStats {
  std::size_t instances = 0;
  RangeStats tokens;
  RangeStats spans;
  RangeStats span_token_ratio;
  std::string policy;
  std::vector<SelectionCounts> per_name;
  // Averages of the per-name columns above.
  double mean_targeted_spans = 0.0;
  double token_fraction = 0.0;
  double span_fraction = 0.0;
};

namespace detail {

class RangeAccumulator {
 public:
  void add(double x) {
    sum_ += x;
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
    ++count_;
  }
  RangeStats result() const {
    if (count_ == 0) return {};
    return {sum_ / static_cast<double>(count_), min_, max_};
  }

 private:
  double sum_ = 0.0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
  std::size_t count_ = 0;
};

}  // namespace detail

// Corpus size statistics plus, for each name, how many tokens and spans the
// policy selects on average.
inline SpanStats span_stats(const Corpus& corpus, const std::vector<std::string>& names,
                            const KPolicy& policy) {
  SpanStats out;
  out.instances = corpus.instances.size();
  out.policy = policy.to_string();
  detail::RangeAccumulator tokens, spans, ratio;
  for (const auto& inst : corpus.instances) {
    const auto n = static_cast<double>(inst.tokens.size());
    const auto s = static_cast<double>(inst.spans.size());
    tokens.add(n);
    spans.add(s);
    ratio.add(s / n);
  }
  out.tokens = tokens.result();
  out.spans = spans.result();
  out.span_token_ratio = ratio.result();

  if (corpus.instances.empty()) {
    for (const auto& name : names) out.per_name.push_back({name});
    return out;
  }
  const auto d = static_cast<double>(corpus.instances.size());
  for (const auto& name : names) {
    SelectionCounts c{name};
    for (const auto& inst : corpus.instances) {
      const auto sel = select(inst, name, policy);
      const auto targeted = targeted_spans(inst, sel);
      c.mean_tokens += static_cast<double>(sel.k());
      c.mean_targeted_spans += static_cast<double>(targeted.k());
      c.token_fraction +=
          static_cast<double>(sel.k()) / static_cast<double>(inst.tokens.size());
      c.span_fraction +=
          static_cast<double>(targeted.k()) / static_cast<double>(inst.spans.size());
    }
    c.mean_tokens /= d;
    c.mean_targeted_spans /= d;
    c.token_fraction /= d;
    c.span_fraction /= d;
    out.per_name.push_back(c);
  }
  if (!names.empty()) {
    for (const auto& c : out.per_name) {
      out.mean_targeted_spans += c.mean_targeted_spans;
      out.token_fraction += c.token_fraction;
      out.span_fraction += c.span_fraction;
    }
    const auto m = static_cast<double>(names.size());
    out.mean_targeted_spans /= m;
    out.token_fraction /= m;
    out.span_fraction /= m;
  }
  return out;
}

}  // namespace attagree
