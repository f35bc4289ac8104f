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
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "attagree/error.hpp"

namespace attagree {

// Coarse POS tag carried by punctuation tokens, and the chunk label of the
// singleton spans that hold them.
inline constexpr std::string_view kPunctTag = "PUNCT";
inline constexpr std::string_view kPunctSpanLabel = "PUNCT";

// Reserved profile name for the human rationale vector.
inline constexpr std::string_view kHumanName = "human";

struct Token {
  std::string text;
  std::string pos;
  bool is_stop = false;
  bool is_punct = false;

  friend bool operator==(const Token&, const Token&) = default;
};

// Half-open token range [start, end) with a chunk label.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string label;

  std::size_t size() const noexcept { return end - start; }
  bool contains(std::size_t token) const noexcept {
    return start <= token && token < end;
  }

  friend bool operator==(const Span&, const Span&) = default;
};

struct AttributionProfile {
  std::string method;
  std::vector<double> scores;

  friend bool operator==(const AttributionProfile&,
                         const AttributionProfile&) = default;
};

struct Instance {
  std::string id;
  std::string label;
  std::vector<Token> tokens;
  std::vector<Span> spans;
  // Kept in file order; looked up by name.
  std::vector<AttributionProfile> profiles;
  std::vector<double> human;

  std::size_t size() const noexcept { return tokens.size(); }

  const AttributionProfile* find_profile(std::string_view method) const {
    for (const auto& p : profiles) {
      if (p.method == method) return &p;
    }
    return nullptr;
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Corpus {
  std::vector<Instance> instances;
  std::vector<std::string> methods;

  bool has_method(std::string_view name) const {
    return std::find(methods.begin(), methods.end(), name) != methods.end();
  }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Score vector for a method name or the reserved human identifier.
inline std::span<const double> scores_for(const Instance& inst,
                                          std::string_view name) {
  if (name == kHumanName) return inst.human;
  if (const auto* p = inst.find_profile(name)) return p->scores;
  throw ConfigError("unknown method '" + std::string(name) + "' in instance '" +
                    inst.id + "'");
}

// ---------------------------------------------------------------------------
// k policies

enum class ThresholdKind {
  kMean,
  kMeanPlusSd,
  kMeanPlus2Sd,
  kMeanMinusSd,
  kMeanMinus2Sd,
  kMedian,
};

inline constexpr std::array<ThresholdKind, 6> kAllThresholdKinds = {
    ThresholdKind::kMean,        ThresholdKind::kMeanPlusSd,
    ThresholdKind::kMeanPlus2Sd, ThresholdKind::kMeanMinusSd,
    ThresholdKind::kMeanMinus2Sd, ThresholdKind::kMedian,
};

inline std::string_view to_string(ThresholdKind kind) {
  switch (kind) {
    case ThresholdKind::kMean:
      return "mean";
    case ThresholdKind::kMeanPlusSd:
      return "mean+sd";
    case ThresholdKind::kMeanPlus2Sd:
      return "mean+2sd";
    case ThresholdKind::kMeanMinusSd:
      return "mean-sd";
    case ThresholdKind::kMeanMinus2Sd:
      return "mean-2sd";
    case ThresholdKind::kMedian:
      return "median";
  }
  return "?";
}

inline std::optional<ThresholdKind> parse_threshold_kind(std::string_view s) {
  for (auto kind : kAllThresholdKinds) {
    if (to_string(kind) == s) return kind;
  }
  return std::nullopt;
}

struct FixedK {
  std::size_t k = 4;
  friend bool operator==(const FixedK&, const FixedK&) = default;
};

struct DynamicK {
  ThresholdKind threshold = ThresholdKind::kMean;
  bool positive_only = false;
  std::size_t window = 1;
  friend bool operator==(const DynamicK&, const DynamicK&) = default;
};

class KPolicy {
 public:
  static KPolicy fixed(std::size_t k) {
    if (k == 0) throw ConfigError("fixed k must be >= 1");
    return KPolicy(FixedK{k});
  }

  static KPolicy dynamic(ThresholdKind threshold, bool positive_only = false,
                         std::size_t window = 1) {
    if (window == 0) throw ConfigError("window must be >= 1");
    return KPolicy(DynamicK{threshold, positive_only, window});
  }

  bool is_fixed() const noexcept {
    return std::holds_alternative<FixedK>(mode_);
  }
  bool is_dynamic() const noexcept { return !is_fixed(); }

  const FixedK& as_fixed() const { return std::get<FixedK>(mode_); }
  const DynamicK& as_dynamic() const { return std::get<DynamicK>(mode_); }

  // Round-trips through parse_policy (window is reported separately).
  std::string to_string() const {
    if (is_fixed()) return "fixed:" + std::to_string(as_fixed().k);
    const auto& d = as_dynamic();
    std::string out = "dynamic:" + std::string(attagree::to_string(d.threshold));
    if (d.positive_only) out += ":pos";
    return out;
  }

  // Filesystem-friendly variant of to_string, including a non-default window.
  std::string slug() const {
    std::string out;
    for (char c : to_string()) {
      if (c == ':') out += '_';
      else if (c == '+') out += "plus";
      else if (c == '-') out += "minus";
      else out += c;
    }
    if (is_dynamic() && as_dynamic().window != 1) {
      out += "_w" + std::to_string(as_dynamic().window);
    }
    return out;
  }

  friend bool operator==(const KPolicy&, const KPolicy&) = default;

 private:
  explicit KPolicy(std::variant<FixedK, DynamicK> mode) : mode_(mode) {}
  std::variant<FixedK, DynamicK> mode_;
};

// Parses `fixed:<k>` or `dynamic:<kind>[:pos]`.
inline KPolicy parse_policy(std::string_view text, std::size_t window = 1) {
  auto fail = [&](const std::string& why) -> KPolicy {
    throw ConfigError("bad policy '" + std::string(text) + "': " + why);
  };
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(':', pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (parts[0] == "fixed") {
    if (parts.size() != 2 || parts[1].empty()) return fail("expected fixed:<k>");
    std::size_t k = 0;
    for (char c : parts[1]) {
      if (c < '0' || c > '9') return fail("k is not a positive integer");
      k = k * 10 + static_cast<std::size_t>(c - '0');
      if (k > 1'000'000'000) return fail("k too large");
    }
    if (k == 0) return fail("k must be >= 1");
    return KPolicy::fixed(k);
  }
  if (parts[0] == "dynamic") {
    if (parts.size() < 2 || parts.size() > 3) {
      return fail("expected dynamic:<kind>[:pos]");
    }
    auto kind = parse_threshold_kind(parts[1]);
    if (!kind) return fail("unknown threshold kind '" + std::string(parts[1]) + "'");
    bool positive_only = false;
    if (parts.size() == 3) {
      if (parts[2] != "pos") return fail("expected ':pos' suffix");
      positive_only = true;
    }
    if (window == 0) return fail("window must be >= 1");
    return KPolicy::dynamic(*kind, positive_only, window);
  }
  return fail("expected 'fixed' or 'dynamic'");
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

[[noreturn]] inline void reject(const Instance& inst, std::string field,
                                const std::string& what) {
  throw ValidationError(inst.id, std::move(field), what);
}

inline void validate_scores(const Instance& inst, const std::string& field,
                            std::span<const double> scores) {
  if (scores.size() != inst.tokens.size()) {
    reject(inst, field,
           "length " + std::to_string(scores.size()) + " != token count " +
               std::to_string(inst.tokens.size()));
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      reject(inst, field, "non-finite score at token " + std::to_string(i));
    }
  }
}

}  // namespace detail

// Checks that the spans form a sorted partition of [0, n).
inline void validate_partition(const Instance& inst) {
  const std::size_t n = inst.tokens.size();
  std::size_t expected = 0;
  for (std::size_t j = 0; j < inst.spans.size(); ++j) {
    const auto& s = inst.spans[j];
    if (s.start >= s.end || s.end > n) {
      detail::reject(inst, "spans",
                     "span " + std::to_string(j) + " [" + std::to_string(s.start) +
                         "," + std::to_string(s.end) + ") out of range for " +
                         std::to_string(n) + " tokens");
    }
    if (s.start != expected) {
      detail::reject(inst, "spans",
                     "spans do not partition the tokens (span " +
                         std::to_string(j) + " starts at " +
                         std::to_string(s.start) + ", expected " +
                         std::to_string(expected) + ")");
    }
    expected = s.end;
  }
  if (expected != n) {
    detail::reject(inst, "spans",
                   "spans cover " + std::to_string(expected) + " of " +
                       std::to_string(n) + " tokens");
  }
}

// Full invariant check for one instance. Does not check corpus-level
// method consistency.
inline void validate_instance(const Instance& inst) {
  if (inst.id.empty()) detail::reject(inst, "id", "empty id");
  if (inst.tokens.empty()) detail::reject(inst, "tokens", "no tokens");
  for (std::size_t i = 0; i < inst.tokens.size(); ++i) {
    const auto& t = inst.tokens[i];
    if (t.text.empty()) {
      detail::reject(inst, "tokens", "empty text at token " + std::to_string(i));
    }
    if (t.is_punct && t.pos != kPunctTag) {
      detail::reject(inst, "tokens",
                     "punctuation token " + std::to_string(i) + " has pos '" +
                         t.pos + "', expected " + std::string(kPunctTag));
    }
  }
  validate_partition(inst);
  for (std::size_t j = 0; j < inst.spans.size(); ++j) {
    const auto& s = inst.spans[j];
    for (std::size_t i = s.start; i < s.end; ++i) {
      if (!inst.tokens[i].is_punct) continue;
      if (s.size() != 1 || s.label != kPunctSpanLabel) {
        detail::reject(inst, "spans",
                       "punctuation token " + std::to_string(i) +
                           " is not alone in a PUNCT span (span " +
                           std::to_string(j) + " '" + s.label + "')");
      }
    }
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& p : inst.profiles) {
    if (p.method.empty()) detail::reject(inst, "profiles", "empty method name");
    if (p.method == kHumanName) {
      detail::reject(inst, "profiles",
                     "method name '" + p.method + "' is reserved");
    }
    if (!seen.insert(p.method).second) {
      detail::reject(inst, "profiles", "duplicate method '" + p.method + "'");
    }
    detail::validate_scores(inst, "profiles." + p.method, p.scores);
  }
  detail::validate_scores(inst, "human", inst.human);
  for (std::size_t i = 0; i < inst.human.size(); ++i) {
    if (inst.human[i] < 0.0 || inst.human[i] > 1.0) {
      detail::reject(inst, "human",
                     "value " + std::to_string(inst.human[i]) + " at token " +
                         std::to_string(i) + " outside [0,1]");
    }
  }
}

// Splits every punctuation token out of its chunk into a singleton PUNCT
// span. Other boundaries are kept; the pieces of a split chunk keep its label.
inline Instance normalize_punct_spans(Instance inst) {
  std::vector<Span> out;
  out.reserve(inst.spans.size());
  for (const auto& s : inst.spans) {
    std::size_t run_start = s.start;
    for (std::size_t i = s.start; i < s.end; ++i) {
      if (!inst.tokens[i].is_punct) continue;
      if (run_start < i) out.push_back({run_start, i, s.label});
      out.push_back({i, i + 1, std::string(kPunctSpanLabel)});
      run_start = i + 1;
    }
    if (run_start < s.end) out.push_back({run_start, s.end, s.label});
  }
  inst.spans = std::move(out);
  return inst;
}

}  // namespace attagree
