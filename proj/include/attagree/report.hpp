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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "attagree/agreement.hpp"
#include "attagree/baselines.hpp"
#include "attagree/lingstats.hpp"
#include "attagree/model.hpp"
#include "attagree/random.hpp"
#include "attagree/selection.hpp"
#include "attagree/spanset.hpp"
#include "attagree/table.hpp"
#include "attagree/version.hpp"

namespace attagree {

// Matrices use 4 fractional digits, chi-square values 3.
inline constexpr int kAgreementDigits = 4;
inline constexpr int kChi2Digits = 3;

// ---------------------------------------------------------------------------
// Table builders

inline Table matrix_table(const AgreementMatrix& m) {
  Table t{"agreement_" + std::string(to_string(m.level)) + "_" + m.policy.slug()};
  t.header.push_back("name");
  t.header.insert(t.header.end(), m.labels.begin(), m.labels.end());
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    std::vector<Cell> row{text(m.labels[i])};
    for (std::size_t j = 0; j < m.labels.size(); ++j) {
      row.push_back(num(m.at(i, j), kAgreementDigits));
    }
    t.add_row(std::move(row));
  }
  return t;
}

// Mean of the off-diagonal cells, split into method-method and
// human-method pairs.
struct MatrixSummary {
  std::optional<double> method_pairs;
  std::optional<double> human_pairs;
};

inline MatrixSummary summarize(const AgreementMatrix& m) {
  double sm = 0.0, sh = 0.0;
  std::size_t nm = 0, nh = 0;
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < m.labels.size(); ++j) {
      const auto& v = m.at(i, j);
      if (!v) continue;
      if (m.labels[i] == kHumanName || m.labels[j] == kHumanName) {
        sh += *v;
        ++nh;
      } else {
        sm += *v;
        ++nm;
      }
    }
  }
  MatrixSummary s;
  if (nm) s.method_pairs = sm / static_cast<double>(nm);
  if (nh) s.human_pairs = sh / static_cast<double>(nh);
  return s;
}

inline Table topk_table(const Corpus& corpus, const std::vector<std::string>& names,
                        const KPolicy& policy) {
  Table t{"topk_" + policy.slug(), {"instance", "name", "k", "tokens", "spans"}};
  auto join = [](const IndexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out;
  };
  for (const auto& inst : corpus.instances) {
    for (const auto& name : names) {
      const auto sel = select(inst, name, policy);
      t.add_row({text(inst.id), text(name), count(sel.k()), text(join(sel.indices)),
                 text(join(targeted_spans(inst, sel).span_indices))});
    }
  }
  return t;
}

inline Table span_summary_table(const SpanStats& s) {
  Table t{"span_stats", {"statistic", "mean", "min", "max"}};
  t.add_row({text("tokens_per_instance"), num(s.tokens.mean, 2), num(s.tokens.min, 0),
             num(s.tokens.max, 0)});
  t.add_row({text("spans_per_instance"), num(s.spans.mean, 2), num(s.spans.min, 0),
             num(s.spans.max, 0)});
  t.add_row({text("span_token_ratio"), num(s.span_token_ratio.mean, 4),
             num(s.span_token_ratio.min, 4), num(s.span_token_ratio.max, 4)});
  return t;
}

inline Table span_selection_table(const SpanStats& s, const KPolicy& policy) {
  Table t{"span_selection_" + policy.slug(),
          {"name", "mean_selected_tokens", "mean_targeted_spans", "token_fraction",
           "span_fraction"}};
  for (const auto& c : s.per_name) {
    t.add_row({text(c.name), num(c.mean_tokens, 2), num(c.mean_targeted_spans, 2),
               num(c.token_fraction, 4), num(c.span_fraction, 4)});
  }
  if (!s.per_name.empty()) {
    double tokens = 0.0;
    for (const auto& c : s.per_name) tokens += c.mean_tokens;
    t.add_row({text("average"), num(tokens / static_cast<double>(s.per_name.size()), 2),
               num(s.mean_targeted_spans, 2), num(s.token_fraction, 4),
               num(s.span_fraction, 4)});
  }
  return t;
}

struct RandomVectorRow {
  std::string level;
  std::string source;  // "fixed" or "corpus"
  RandomVectorSpec spec;
  double value = 0.0;
  double exact = 0.0;
};

inline RandomVectorRow run_random_vectors(std::string level, std::string source,
                                          const RandomVectorSpec& spec) {
  return {std::move(level), std::move(source), spec, random_vector_baseline(spec),
          expected_random_vector_agreement(spec.length, spec.ones)};
}

inline Table random_vector_table(const std::vector<RandomVectorRow>& rows) {
  Table t{"baseline_random_vectors",
          {"level", "source", "length", "ones", "trials", "seed", "baseline", "exact"}};
  for (const auto& r : rows) {
    t.add_row({text(r.level), text(r.source), count(r.spec.length), count(r.spec.ones),
               count(r.spec.trials), text(std::to_string(r.spec.seed)),
               num(r.value, kAgreementDigits), num(r.exact, kAgreementDigits)});
  }
  return t;
}

inline Table baseline_table(const std::vector<BaselineRow>& rows, Level level,
                            const KPolicy& policy) {
  Table t{"baseline_shuffle_" + std::string(to_string(level)) + "_" + policy.slug(),
          {"method", "baseline", "min_agreement", "max_agreement", "min_partner",
           "max_partner", "min_below_baseline", "max_below_baseline", "skipped",
           "summary"}};
  for (const auto& r : rows) {
    // BL:minAgr--maxAgr with '*' marking values below the baseline.
    auto mark = [](const std::optional<double>& v, bool below) {
      return render(num(v, 2)) + (below ? "*" : "");
    };
    std::string summary = render(num(r.baseline.value, 2)) + ":" +
                          mark(r.min_agreement, r.min_below_baseline()) + "--" +
                          mark(r.max_agreement, r.max_below_baseline());
    t.add_row({text(r.method), num(r.baseline.value, kAgreementDigits),
               num(r.min_agreement, kAgreementDigits), num(r.max_agreement, kAgreementDigits),
               text(r.min_partner), text(r.max_partner),
               text(r.min_below_baseline() ? "yes" : "no"),
               text(r.max_below_baseline() ? "yes" : "no"), count(r.baseline.skipped),
               text(summary)});
  }
  return t;
}

inline std::string scores_label(bool positive_only) { return positive_only ? ">0" : "all"; }

// Long form: one row per (scores, threshold, method).
inline Table k_values_table(const ThresholdBenchmark& b) {
  Table t{"thresholds_k", {"scores", "threshold", "method", "mean_k", "sd_k"}};
  for (const auto& k : b.k_values) {
    t.add_row({text(scores_label(k.positive_only)), text(std::string(to_string(k.kind))),
               text(k.method), num(k.mean_k, 2), num(k.sd_k, 2)});
  }
  return t;
}

// Wide form: rows (scores, method), one "mean±sd" column per threshold.
inline Table k_values_wide_table(const ThresholdBenchmark& b) {
  Table t{"thresholds_k_wide", {"scores", "method"}};
  for (auto kind : kAllThresholdKinds) t.header.emplace_back(to_string(kind));
  std::vector<std::string> methods;
  for (const auto& k : b.k_values) {
    if (k.positive_only || k.kind != ThresholdKind::kMean) continue;
    methods.push_back(k.method);
  }
  for (bool pos : {false, true}) {
    for (const auto& m : methods) {
      std::vector<Cell> row{text(scores_label(pos)), text(m)};
      for (auto kind : kAllThresholdKinds) {
        for (const auto& k : b.k_values) {
          if (k.positive_only == pos && k.kind == kind && k.method == m) {
            row.push_back(text(format_fixed(k.mean_k, 2) + "±" + format_fixed(k.sd_k, 2)));
          }
        }
      }
      t.add_row(std::move(row));
    }
  }
  return t;
}

inline Table distance_table(const ThresholdBenchmark& b) {
  Table t{"thresholds_distance", {"scores"}};
  for (auto kind : kAllThresholdKinds) t.header.emplace_back(to_string(kind));
  for (bool pos : {false, true}) {
    std::vector<Cell> row{text(scores_label(pos))};
    for (auto kind : kAllThresholdKinds) {
      for (const auto& d : b.ranking) {
        if (d.kind == kind && d.positive_only == pos) row.push_back(num(d.distance, 3));
      }
    }
    t.add_row(std::move(row));
  }
  return t;
}

inline Table ranking_table(const ThresholdBenchmark& b) {
  Table t{"thresholds_ranking", {"rank", "threshold", "scores", "policy", "distance"}};
  for (std::size_t i = 0; i < b.ranking.size(); ++i) {
    const auto& d = b.ranking[i];
    t.add_row({count(i + 1), text(std::string(to_string(d.kind))),
               text(scores_label(d.positive_only)),
               text(KPolicy::dynamic(d.kind, d.positive_only, b.window).to_string()),
               num(d.distance, 3)});
  }
  return t;
}

inline Table preference_table(const std::vector<PreferenceProfile>& profiles,
                              const std::vector<std::string>& tags, const KPolicy& policy) {
  Table t{"preferences_" + policy.slug(),
          {"name", "selected", "stop", "punct", "stop_ratio", "punct_ratio"}};
  for (const auto& tag : tags) {
    t.header.push_back(tag);
    t.header.push_back(tag + "_ratio");
  }
  t.header.push_back("other_pos");
  for (const auto& p : profiles) {
    std::vector<Cell> row{text(p.name), count(p.total_selected), count(p.stop_count),
                          count(p.punct_count), num(p.stop_ratio(), 4),
                          num(p.punct_ratio(), 4)};
    std::size_t in_set = 0;
    for (const auto& tag : tags) {
      const auto c = p.pos_count(tag);
      in_set += c;
      row.push_back(count(c));
      row.push_back(num(p.total_selected ? static_cast<double>(c) /
                                               static_cast<double>(p.total_selected)
                                         : 0.0,
                        4));
    }
    row.push_back(count(p.total_selected - in_set));
    t.add_row(std::move(row));
  }
  return t;
}

// One row per pair, three column groups (stop, punct, POS) as chi2/p/df/sig.
inline Table chi2_table(const std::vector<Chi2Entry>& entries, const KPolicy& policy) {
  Table t{"chi2_" + policy.slug(), {"comparison"}};
  for (auto wc : kAllWordClasses) {
    const std::string c(to_string(wc));
    for (const char* col : {"_chi2", "_p", "_df", "_sig"}) t.header.push_back(c + col);
  }
  for (std::size_t i = 0; i < entries.size(); i += kAllWordClasses.size()) {
    std::vector<Cell> row{text(entries[i].first + " vs " + entries[i].second)};
    for (std::size_t w = 0; w < kAllWordClasses.size(); ++w) {
      const auto& e = entries[i + w];
      if (e.result) {
        row.push_back(num(e.result->statistic, kChi2Digits));
        row.push_back(num(e.result->p_value, kChi2Digits));
        row.push_back(count(static_cast<std::size_t>(e.result->df)));
        row.push_back(text(e.result->significant ? "*" : ""));
      } else {
        row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{},
                               text("degenerate")});
      }
    }
    t.add_row(std::move(row));
  }
  return t;
}

inline Table alternation_table(const AlternationReport& r, const KPolicy& policy) {
  Table t{"np_alternation_" + policy.slug(), {"statistic", "value"}};
  std::string pattern;
  for (std::size_t i = 0; i < r.pattern.size(); ++i) pattern += (i ? "," : "") + r.pattern[i];
  t.add_row({text("pattern"), text(pattern)});
  t.add_row({text("probe_first"), text(r.probe_first)});
  t.add_row({text("probe_second"), text(r.probe_second)});
  t.add_row({text("candidate_spans"), count(r.candidate_spans)});
  t.add_row({text("matched_spans"), count(r.matched_spans)});
  t.add_row({text("matched_share"),
             num(r.candidate_spans ? static_cast<double>(r.matched_spans) /
                                         static_cast<double>(r.candidate_spans)
                                   : std::optional<double>{},
                 4)});
  for (std::size_t p = 0; p < r.pattern.size(); ++p) {
    t.add_row({text("first_targets_" + r.pattern[p]), count(r.first_targets[p])});
  }
  for (std::size_t p = 0; p < r.pattern.size(); ++p) {
    t.add_row({text("second_targets_" + r.pattern[p]), count(r.second_targets[p])});
  }
  for (std::size_t p = 0; p < r.pattern.size(); ++p) {
    for (std::size_t q = 0; q < r.pattern.size(); ++q) {
      t.add_row({text("joint_first_" + r.pattern[p] + "_second_" + r.pattern[q]),
                 count(r.joint[p][q])});
    }
  }
  t.add_row({text("alternations"), count(r.alternations)});
  t.add_row({text("first_in_span_ratio"), num(r.first_in_span_ratio, 4)});
  t.add_row({text("second_in_span_ratio"), num(r.second_in_span_ratio, 4)});
  return t;
}

// ---------------------------------------------------------------------------
// Full pipeline

struct ReportConfig {
  std::string data_path;
  std::vector<std::string> methods;  // empty: every corpus method
  bool with_human = false;
  std::uint64_t seed = 0;
  std::size_t window = 1;
  std::size_t jobs = 1;
  std::size_t trials = 1000;
  Format format = Format::kCsv;
  bool yates = false;
  std::vector<std::string> pos_tags;  // empty: top tags of the human profile
  double target_mean = 4.0;
  double target_sd = 3.0;
  // Alternation analysis; empty probes: first two methods, consensus: the
  // next two when present.
  std::vector<std::string> probes;
  std::vector<std::string> consensus;
  std::vector<std::string> pattern = {"DET", "NOUN"};
};

struct Artifact {
  std::string file;
  std::string command;  // CLI invocation that regenerates it
  std::uint64_t checksum = 0;
};

namespace detail {

inline std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

inline std::uint64_t file_checksum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

inline std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

class ReportWriter {
 public:
  ReportWriter(std::filesystem::path dir, const ReportConfig& cfg) : dir_(std::move(dir)), cfg_(cfg) {
    std::filesystem::create_directories(dir_);
  }

  void write(const Table& table, const std::string& command) {
    write_text(table.name + extension(cfg_.format), to_string(table, cfg_.format), command);
  }

  void write_text(const std::string& file, const std::string& content,
                  const std::string& command) {
    std::ofstream out(dir_ / file, std::ios::binary);
    if (!out) throw Error("cannot write '" + (dir_ / file).string() + "'");
    out << content;
    artifacts_.push_back({file, command, fnv1a64(content)});
  }

  const std::vector<Artifact>& artifacts() const { return artifacts_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  const ReportConfig& cfg_;
  std::vector<Artifact> artifacts_;
};

}  // namespace detail

// Runs every analysis on the corpus and writes one artifact per table plus a
// manifest.json into `out_dir`. Output depends only on (corpus, config).
inline std::vector<Artifact> run_report(const Corpus& corpus, const ReportConfig& cfg,
                                        const std::filesystem::path& out_dir) {
  const auto methods = cfg.methods.empty() ? corpus.methods : cfg.methods;
  check_names(corpus, methods);
  if (methods.size() < 2) throw ConfigError("report needs at least 2 methods");
  auto names = methods;
  if (cfg.with_human) names.emplace_back(kHumanName);

  detail::ReportWriter w(out_dir, cfg);
  const std::string data = cfg.data_path;
  const std::string sel = " --methods " + detail::join_names(methods) +
                          (cfg.with_human ? " --with-human" : "");
  const std::string win = cfg.window != 1 ? " --window " + std::to_string(cfg.window) : "";
  const std::string fmt = cfg.format == Format::kCsv    ? ""
                          : cfg.format == Format::kJson ? " --format json"
                                                        : " --format md";
  const std::string seed = " --seed " + std::to_string(cfg.seed);

  const auto fixed4 = KPolicy::fixed(4);
  const std::vector<KPolicy> policies = {
      fixed4,
      KPolicy::dynamic(ThresholdKind::kMean, false, cfg.window),
      KPolicy::dynamic(ThresholdKind::kMean, true, cfg.window),
      KPolicy::dynamic(ThresholdKind::kMedian, true, cfg.window),
  };

  // Corpus and span statistics.
  const auto stats = span_stats(corpus, names, fixed4);
  w.write(span_summary_table(stats), "attagree spans --data " + data + sel + fmt);
  w.write(span_selection_table(stats, fixed4), "attagree spans --data " + data + sel + fmt);

  // Agreement matrices.
  Table summary{"agreement_summary",
                {"policy", "level", "method_pairs", "human_pairs"}};
  for (const auto& policy : policies) {
    for (auto level : {Level::kToken, Level::kSpan}) {
      const auto m = pairwise_matrix(corpus, names, level, policy, cfg.jobs);
      w.write(matrix_table(m), "attagree agreement --data " + data + " --policy " +
                                   policy.to_string() + win + " --level " +
                                   std::string(to_string(level)) + sel + fmt);
      const auto s = summarize(m);
      summary.add_row({text(policy.to_string()), text(std::string(to_string(level))),
                       num(s.method_pairs, kAgreementDigits),
                       num(s.human_pairs, kAgreementDigits)});
    }
  }
  w.write(summary, "attagree report --data " + data + sel + seed);

  // Random binary vector baselines: fixed 16/23 of 100, and the ones-counts
  // implied by this corpus' fixed-4 highlight fractions.
  std::vector<RandomVectorRow> rv;
  auto rv_cmd = [&](std::size_t ones) {
    return "attagree baseline random-vectors --len 100 --ones " + std::to_string(ones) +
           " --trials " + std::to_string(cfg.trials) + seed + fmt;
  };
  std::string rv_commands;
  for (auto [level, ones] : {std::pair{"token", std::size_t{16}}, std::pair{"span", std::size_t{23}}}) {
    rv.push_back(run_random_vectors(level, "fixed", {100, ones, cfg.trials, cfg.seed}));
    rv_commands += (rv_commands.empty() ? "" : "; ") + rv_cmd(ones);
  }
  if (stats.token_fraction > 0.0) {
    const auto ones = ones_for_fraction(stats.token_fraction, 100);
    rv.push_back(run_random_vectors("token", "corpus", {100, ones, cfg.trials, cfg.seed}));
    rv_commands += "; " + rv_cmd(ones);
  }
  if (stats.span_fraction > 0.0) {
    const auto ones = ones_for_fraction(stats.span_fraction, 100);
    rv.push_back(run_random_vectors("span", "corpus", {100, ones, cfg.trials, cfg.seed}));
    rv_commands += "; " + rv_cmd(ones);
  }
  w.write(random_vector_table(rv), rv_commands);

  // Per-method shuffle baselines for the dynamic policies.
  for (std::size_t p = 1; p < policies.size(); ++p) {
    for (auto level : {Level::kToken, Level::kSpan}) {
      const auto rows =
          beats_baseline_report(corpus, methods, policies[p], level, cfg.seed, cfg.jobs);
      w.write(baseline_table(rows, level, policies[p]),
              "attagree baseline shuffle --data " + data + " --policy " +
                  policies[p].to_string() + win + " --level " +
                  std::string(to_string(level)) + " --methods " +
                  detail::join_names(methods) + seed + fmt);
    }
  }

  // Threshold benchmark.
  const auto bench =
      threshold_benchmark(corpus, methods, cfg.target_mean, cfg.target_sd, cfg.window);
  char target[64];
  std::snprintf(target, sizeof target, "%g:%g", cfg.target_mean, cfg.target_sd);
  const std::string th_cmd = "attagree thresholds --data " + data + " --target " + target +
                             win + " --methods " + detail::join_names(methods) + fmt;
  w.write(k_values_table(bench), th_cmd);
  w.write(k_values_wide_table(bench), th_cmd);
  w.write(distance_table(bench), th_cmd);
  w.write(ranking_table(bench), th_cmd);

  // Word-class preferences and chi-square battery (fixed k = 4).
  auto pref_names = methods;
  pref_names.emplace_back(kHumanName);
  const auto tags = cfg.pos_tags.empty() ? default_pos_tags(corpus, fixed4) : cfg.pos_tags;
  std::vector<PreferenceProfile> profiles;
  for (const auto& n : pref_names) profiles.push_back(preference_profile(corpus, n, fixed4));
  const std::string tag_opt = cfg.pos_tags.empty() ? "" : " --tags " + detail::join_names(tags);
  w.write(preference_table(profiles, tags, fixed4),
          "attagree prefs --data " + data + " --policy fixed:4 --methods " +
              detail::join_names(methods) + " --with-human" + tag_opt + fmt);
  std::vector<Chi2Entry> chi2;
  if (tags.size() >= 2) chi2 = chi2_all_pairs(corpus, pref_names, fixed4, tags, cfg.yates);
  w.write(chi2_table(chi2, fixed4),
          "attagree chi2 --data " + data + " --policy fixed:4 --methods " +
              detail::join_names(methods) + " --with-human" + tag_opt +
              (cfg.yates ? " --yates" : "") + fmt);

  // Head/modifier alternation.
  AlternationQuery q;
  q.probe_first = cfg.probes.size() > 0 ? cfg.probes[0] : methods[0];
  q.probe_second = cfg.probes.size() > 1 ? cfg.probes[1] : methods[1];
  if (!cfg.consensus.empty() || !cfg.probes.empty()) {
    q.consensus = cfg.consensus;
  } else {
    for (std::size_t i = 2; i < methods.size() && i < 4; ++i) q.consensus.push_back(methods[i]);
  }
  q.pattern = cfg.pattern;
  const auto alt = np_alternation(corpus, q, fixed4);
  w.write(alternation_table(alt, fixed4),
          "attagree np-analysis --data " + data + " --policy fixed:4 --probes " +
              q.probe_first + "," + q.probe_second +
              (q.consensus.empty() ? "" : " --consensus " + detail::join_names(q.consensus)) +
              " --pattern " + detail::join_names(q.pattern) + fmt);

  // Manifest.
  nlohmann::ordered_json manifest;
  manifest["tool"] = "attagree";
  manifest["version"] = kVersion;
  manifest["data"] = {{"path", cfg.data_path},
                      {"instances", corpus.instances.size()},
                      {"fnv1a64", cfg.data_path.empty()
                                      ? std::string()
                                      : detail::hex(detail::file_checksum(cfg.data_path))}};
  manifest["seed"] = cfg.seed;
  manifest["window"] = cfg.window;
  manifest["trials"] = cfg.trials;
  manifest["methods"] = methods;
  manifest["with_human"] = cfg.with_human;
  manifest["pos_tags"] = tags;
  manifest["yates"] = cfg.yates;
  manifest["target"] = {cfg.target_mean, cfg.target_sd};
  manifest["rng"] = "mt19937_64, Fisher-Yates with rejection-sampled bounds; "
                    "instance seed = splitmix64(seed ^ fnv1a64(id))";
  auto policies_json = nlohmann::ordered_json::array();
  for (const auto& p : policies) policies_json.push_back(p.to_string());
  manifest["policies"] = policies_json;
  auto arts = nlohmann::ordered_json::array();
  for (const auto& a : w.artifacts()) {
    arts.push_back({{"file", a.file}, {"fnv1a64", detail::hex(a.checksum)}, {"command", a.command}});
  }
  manifest["artifacts"] = arts;
  w.write_text("manifest.json", manifest.dump(2) + "\n", "attagree report --data " + data +
                                                            " --out " + out_dir.string() +
                                                            sel + seed + win + fmt);
  return w.artifacts();
}

}  // namespace attagree
