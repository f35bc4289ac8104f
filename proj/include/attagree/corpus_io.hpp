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
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "attagree/error.hpp"
#include "attagree/model.hpp"

// JSONL corpus format, one instance per line:
//
//   {"id": str, "label": str,
//    "tokens": [{"text": str, "pos": str, "is_stop": bool, "is_punct": bool}],
//    "spans": [{"start": int, "end": int, "label": str}],
//    "profiles": {"<method>": [float, ...]},
//    "human": [float, ...]}
//
// Tokens are subwords of the model tokenizer with special tokens removed.
// Word-level annotations (POS, stop flag, human rationale score) are copied
// onto every subword of the word. Spans end-exclusive.

namespace attagree {

struct LoadOptions {
  // When false, instances may carry extra methods and the corpus keeps the
  // intersection; when true any difference in method sets is an error.
  bool require_consistent_methods = true;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline const ojson& require_field(const ojson& obj, const char* key,
                                  std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(line, std::string("missing field '") + key + "'");
  }
  return *it;
}

inline std::string require_string(const ojson& obj, const char* key,
                                  std::size_t line) {
  const auto& v = require_field(obj, key, line);
  if (!v.is_string()) {
    throw ParseError(line, std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

inline bool require_bool(const ojson& obj, const char* key, std::size_t line) {
  const auto& v = require_field(obj, key, line);
  if (!v.is_boolean()) {
    throw ParseError(line, std::string("field '") + key + "' must be a boolean");
  }
  return v.get<bool>();
}

inline std::size_t require_index(const ojson& obj, const char* key,
                                 std::size_t line) {
  const auto& v = require_field(obj, key, line);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(line,
                     std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline std::vector<double> require_numbers(const ojson& v, const std::string& what,
                                           std::size_t line) {
  if (!v.is_array()) throw ParseError(line, what + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) throw ParseError(line, what + " must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace detail

// Parses one JSONL line into an instance and validates it. `line` is used in
// error messages only.
inline Instance parse_instance(const std::string& text, std::size_t line = 0) {
  using detail::ojson;
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError(line, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(line, "expected a JSON object");

  Instance inst;
  inst.id = detail::require_string(j, "id", line);
  inst.label = detail::require_string(j, "label", line);

  const auto& tokens = detail::require_field(j, "tokens", line);
  if (!tokens.is_array()) throw ParseError(line, "field 'tokens' must be an array");
  for (const auto& t : tokens) {
    if (!t.is_object()) throw ParseError(line, "token entries must be objects");
    inst.tokens.push_back({detail::require_string(t, "text", line),
                           detail::require_string(t, "pos", line),
                           detail::require_bool(t, "is_stop", line),
                           detail::require_bool(t, "is_punct", line)});
  }

  const auto& spans = detail::require_field(j, "spans", line);
  if (!spans.is_array()) throw ParseError(line, "field 'spans' must be an array");
  for (const auto& s : spans) {
    if (!s.is_object()) throw ParseError(line, "span entries must be objects");
    inst.spans.push_back({detail::require_index(s, "start", line),
                          detail::require_index(s, "end", line),
                          detail::require_string(s, "label", line)});
  }

  const auto& profiles = detail::require_field(j, "profiles", line);
  if (!profiles.is_object()) {
    throw ParseError(line, "field 'profiles' must be an object");
  }
  for (const auto& [name, scores] : profiles.items()) {
    inst.profiles.push_back(
        {name, detail::require_numbers(scores, "profile '" + name + "'", line)});
  }
  inst.human = detail::require_numbers(detail::require_field(j, "human", line),
                                       "field 'human'", line);

  try {
    validate_instance(inst);
  } catch (const ValidationError& e) {
    throw ValidationError(e.instance_id(), e.field(), e.message(), line);
  }
  return inst;
}

inline Corpus load_corpus(std::istream& in, const LoadOptions& options = {}) {
  Corpus corpus;
  std::unordered_set<std::string> ids;
  std::vector<std::size_t> lines;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    Instance inst = parse_instance(text, line);
    if (!ids.insert(inst.id).second) {
      throw ValidationError(inst.id, "id", "duplicate instance id", line);
    }
    corpus.instances.push_back(std::move(inst));
    lines.push_back(line);
  }
  if (corpus.instances.empty()) return corpus;

  for (const auto& p : corpus.instances.front().profiles) {
    bool everywhere = std::all_of(
        corpus.instances.begin(), corpus.instances.end(),
        [&](const Instance& inst) { return inst.find_profile(p.method) != nullptr; });
    if (everywhere) corpus.methods.push_back(p.method);
  }
  if (options.require_consistent_methods) {
    for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
      const auto& inst = corpus.instances[i];
      if (inst.profiles.size() != corpus.methods.size()) {
        std::string missing;
        for (const auto& p : corpus.instances.front().profiles) {
          if (!inst.find_profile(p.method)) missing += " " + p.method;
        }
        for (const auto& p : inst.profiles) {
          if (!corpus.has_method(p.method)) missing += " " + p.method;
        }
        throw ValidationError(inst.id, "profiles",
                              "method set differs from the rest of the corpus:" +
                                  missing,
                              lines[i]);
      }
    }
  }
  return corpus;
}

inline Corpus load_corpus(const std::string& path, const LoadOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus file '" + path + "'");
  return load_corpus(in, options);
}

// Serializes one instance to a single JSONL line (no trailing newline).
// Doubles are written in shortest round-trip form.
inline std::string serialize_instance(const Instance& inst) {
  detail::ojson j;
  j["id"] = inst.id;
  j["label"] = inst.label;
  auto& tokens = j["tokens"] = detail::ojson::array();
  for (const auto& t : inst.tokens) {
    tokens.push_back({{"text", t.text},
                      {"pos", t.pos},
                      {"is_stop", t.is_stop},
                      {"is_punct", t.is_punct}});
  }
  auto& spans = j["spans"] = detail::ojson::array();
  for (const auto& s : inst.spans) {
    spans.push_back({{"start", s.start}, {"end", s.end}, {"label", s.label}});
  }
  auto& profiles = j["profiles"] = detail::ojson::object();
  for (const auto& p : inst.profiles) profiles[p.method] = p.scores;
  j["human"] = inst.human;
  return j.dump();
}

inline void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& inst : corpus.instances) out << serialize_instance(inst) << '\n';
}

inline std::string serialize_corpus(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(out, corpus);
  return out.str();
}

}  // namespace attagree
