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

// Command-line front end: every analysis as a subcommand, plus `report`
// which runs the full pipeline into one directory.
//
// Exit codes: 0 ok, 1 bad configuration, 2 invalid data.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "attagree/attagree.hpp"

namespace {

using namespace attagree;

constexpr const char* kSeedEnv = "ATTAGREE_SEED";

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
  }
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Options {
  std::string data;
  std::string policy = "fixed:4";
  std::size_t window = 1;
  std::string level = "token";
  std::string methods;
  bool with_human = false;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::size_t jobs = 1;
  bool yates = false;
  std::string tags;
  bool allow_partial = false;

  // baseline random-vectors
  std::size_t length = 100;
  std::size_t ones = 16;
  std::size_t trials = 1000;

  std::string target = "4:3";
  std::string probes;
  std::string consensus;
  std::string pattern = "DET,NOUN";
};

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  Corpus corpus() const {
    LoadOptions lo;
    lo.require_consistent_methods = !o_.allow_partial;
    return load_corpus(o_.data, lo);
  }

  KPolicy policy() const { return parse_policy(o_.policy, o_.window); }
  Format format() const { return parse_format(o_.format); }

  std::vector<std::string> methods(const Corpus& c) const {
    auto m = o_.methods.empty() ? c.methods : split_list(o_.methods);
    check_names(c, m);
    return m;
  }

  std::vector<std::string> names(const Corpus& c) const {
    auto n = methods(c);
    if (o_.with_human) n.emplace_back(kHumanName);
    return n;
  }

  void emit(const Table& t) const {
    if (o_.out.empty()) {
      write_table(std::cout, t, format());
      return;
    }
    std::filesystem::create_directories(o_.out);
    const auto path = std::filesystem::path(o_.out) / (t.name + extension(format()));
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path.string() + "'");
    write_table(f, t, format());
    std::cerr << "wrote " << path.string() << "\n";
  }

  void emit_all(const std::vector<Table>& tables) const {
    // One JSON document on stdout, keyed by table name.
    if (o_.out.empty() && format() == Format::kJson) {
      auto doc = nlohmann::ordered_json::object();
      for (const auto& t : tables) doc[t.name] = to_json(t);
      std::cout << doc.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i && o_.out.empty()) std::cout << '\n';
      emit(tables[i]);
    }
  }

  std::vector<std::string> pos_tags(const Corpus& c, const KPolicy& p) const {
    return o_.tags.empty() ? default_pos_tags(c, p) : split_list(o_.tags);
  }

  const Options& opts() const { return o_; }

 private:
  const Options& o_;
};

int run(int argc, char** argv) {
  Options o;
  o.seed = default_seed();

  CLI::App app{"Agreement between feature-attribution methods at token and span level"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", o.data, "JSONL corpus")->required()->check(CLI::ExistingFile);
    sub->add_flag("--allow-partial-methods", o.allow_partial,
                  "Keep only methods present in every instance instead of failing");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output directory (default: stdout)");
    sub->add_option("--format", o.format, "csv|json|md")->capture_default_str();
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--policy", o.policy,
                    "fixed:<k> or dynamic:<mean|mean+sd|mean+2sd|mean-sd|mean-2sd|median>[:pos]")
        ->capture_default_str();
    sub->add_option("--window", o.window, "Local-maximum window for dynamic k")
        ->capture_default_str();
  };
  auto add_names = [&](CLI::App* sub) {
    sub->add_option("--methods", o.methods, "Comma-separated method names (default: all)");
    sub->add_flag("--with-human", o.with_human, "Include the human rationale profile");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed,
                    std::string("Random seed (default: $") + kSeedEnv + " or 0)");
  };

  auto* validate = app.add_subcommand("validate", "Check a corpus file against the schema");
  validate->add_option("data", o.data, "JSONL corpus")->required()->check(CLI::ExistingFile);
  validate->add_flag("--allow-partial-methods", o.allow_partial);

  auto* topk = app.add_subcommand("topk", "Per-instance top-k token and span selections");
  add_data(topk);
  add_policy(topk);
  add_names(topk);
  add_output(topk);

  auto* agreement = app.add_subcommand("agreement", "Pairwise mean agreement@k matrix");
  add_data(agreement);
  add_policy(agreement);
  add_names(agreement);
  agreement->add_option("--level", o.level, "token|span")->capture_default_str();
  add_jobs(agreement);
  add_output(agreement);

  auto* spans = app.add_subcommand("spans", "Token/span statistics and targeted spans");
  add_data(spans);
  add_policy(spans);
  add_names(spans);
  add_output(spans);

  auto* baseline = app.add_subcommand("baseline", "Random baselines");
  baseline->require_subcommand(1);
  auto* rv = baseline->add_subcommand("random-vectors", "Shuffled binary vector baseline");
  rv->add_option("--len", o.length, "Vector length")->capture_default_str();
  rv->add_option("--ones", o.ones, "Number of 1s per vector")->capture_default_str();
  rv->add_option("--trials", o.trials, "Number of shuffles")->capture_default_str();
  add_seed(rv);
  add_output(rv);
  auto* sh = baseline->add_subcommand("shuffle", "Per-method shuffled-profile baseline");
  add_data(sh);
  add_policy(sh);
  sh->add_option("--method", o.methods, "Method(s) to report, comma-separated (default: all)");
  sh->add_option("--methods", o.methods, "Alias of --method");
  sh->add_option("--level", o.level, "token|span")->capture_default_str();
  add_seed(sh);
  add_jobs(sh);
  add_output(sh);

  auto* thresholds = app.add_subcommand("thresholds", "Dynamic-k statistics per threshold");
  add_data(thresholds);
  thresholds->add_option("--target", o.target, "Target k as mean:sd")->capture_default_str();
  thresholds->add_option("--window", o.window, "Local-maximum window")->capture_default_str();
  thresholds->add_option("--methods", o.methods, "Comma-separated method names");
  add_output(thresholds);

  auto* prefs = app.add_subcommand("prefs", "Word-class preferences of selections");
  add_data(prefs);
  add_policy(prefs);
  add_names(prefs);
  prefs->add_option("--tags", o.tags, "POS tag set (default: top 5 human tags)");
  add_output(prefs);

  auto* chi2 = app.add_subcommand("chi2", "Chi-square tests between preference profiles");
  add_data(chi2);
  add_policy(chi2);
  add_names(chi2);
  chi2->add_option("--tags", o.tags, "POS tag set (default: top 5 human tags)");
  chi2->add_flag("--yates", o.yates, "Continuity correction on 2x2 tables");
  add_output(chi2);

  auto* np = app.add_subcommand("np-analysis", "Head/modifier alternation in noun phrases");
  add_data(np);
  add_policy(np);
  np->add_option("--probes", o.probes, "Two methods to compare, comma-separated")->required();
  np->add_option("--consensus", o.consensus, "Methods that must target the span");
  np->add_option("--pattern", o.pattern, "POS pattern")->capture_default_str();
  add_output(np);

  auto* report = app.add_subcommand("report", "Run every analysis into one directory");
  add_data(report);
  add_names(report);
  report->add_option("--out", o.out, "Output directory")->required();
  report->add_option("--format", o.format, "csv|json|md")->capture_default_str();
  report->add_option("--window", o.window, "Local-maximum window")->capture_default_str();
  report->add_option("--trials", o.trials, "Random-vector trials")->capture_default_str();
  report->add_option("--tags", o.tags, "POS tag set (default: top 5 human tags)");
  report->add_option("--target", o.target, "Target k as mean:sd")->capture_default_str();
  report->add_option("--probes", o.probes, "Alternation probes");
  report->add_option("--consensus", o.consensus, "Alternation consensus methods");
  report->add_option("--pattern", o.pattern, "Alternation POS pattern")->capture_default_str();
  report->add_flag("--yates", o.yates, "Continuity correction on 2x2 tables");
  add_seed(report);
  add_jobs(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg) {
      if (c == '\n') c = ' ';
    }
    std::cerr << "error: config: " << msg << "\n";
    return 1;
  }

  Runner r(o);
  auto parse_target = [&]() {
    const auto parts = split_list(o.target);
    try {
      if (parts.size() == 1) {
        auto colon = o.target.find(':');
        if (colon != std::string::npos) {
          return std::pair{std::stod(o.target.substr(0, colon)),
                           std::stod(o.target.substr(colon + 1))};
        }
      }
    } catch (const std::exception&) {
    }
    throw ConfigError("bad --target '" + o.target + "' (expected mean:sd)");
  };

  if (*validate) {
    const auto c = r.corpus();
    std::cout << "ok: " << c.instances.size() << " instances, " << c.methods.size()
              << " methods:";
    for (const auto& m : c.methods) std::cout << ' ' << m;
    std::cout << "\n";
  } else if (*topk) {
    const auto c = r.corpus();
    r.emit(topk_table(c, r.names(c), r.policy()));
  } else if (*agreement) {
    const auto c = r.corpus();
    r.emit(matrix_table(pairwise_matrix(c, r.names(c), parse_level(o.level), r.policy(), o.jobs)));
  } else if (*spans) {
    const auto c = r.corpus();
    const auto stats = span_stats(c, r.names(c), r.policy());
    r.emit_all({span_summary_table(stats), span_selection_table(stats, r.policy())});
  } else if (*rv) {
    r.format();
    const RandomVectorSpec spec{o.length, o.ones, o.trials, o.seed};
    r.emit(random_vector_table({run_random_vectors("-", "fixed", spec)}));
  } else if (*sh) {
    const auto c = r.corpus();
    const auto level = parse_level(o.level);
    const auto policy = r.policy();
    const auto wanted = r.methods(c);
    std::vector<BaselineRow> rows;
    if (c.methods.size() >= 2) {
      for (auto& row : beats_baseline_report(c, c.methods, policy, level, o.seed, o.jobs)) {
        if (std::find(wanted.begin(), wanted.end(), row.method) != wanted.end()) {
          rows.push_back(std::move(row));
        }
      }
    } else {
      for (const auto& m : wanted) {
        rows.push_back({m, shuffle_baseline(c, m, policy, level, o.seed, o.jobs)});
      }
    }
    r.emit(baseline_table(rows, level, policy));
  } else if (*thresholds) {
    const auto c = r.corpus();
    const auto [mean, sd] = parse_target();
    if (o.window == 0) throw ConfigError("window must be >= 1");
    const auto b = threshold_benchmark(c, r.methods(c), mean, sd, o.window);
    r.emit_all({k_values_wide_table(b), distance_table(b), ranking_table(b)});
  } else if (*prefs) {
    const auto c = r.corpus();
    const auto policy = r.policy();
    std::vector<PreferenceProfile> profiles;
    for (const auto& n : r.names(c)) profiles.push_back(preference_profile(c, n, policy));
    r.emit(preference_table(profiles, r.pos_tags(c, policy), policy));
  } else if (*chi2) {
    const auto c = r.corpus();
    const auto policy = r.policy();
    const auto entries = chi2_all_pairs(c, r.names(c), policy, r.pos_tags(c, policy), o.yates);
    r.emit(chi2_table(entries, policy));
  } else if (*np) {
    const auto c = r.corpus();
    const auto probes = split_list(o.probes);
    if (probes.size() != 2) throw ConfigError("--probes needs exactly two methods");
    AlternationQuery q;
    q.probe_first = probes[0];
    q.probe_second = probes[1];
    q.consensus = split_list(o.consensus);
    q.pattern = split_list(o.pattern);
    r.emit(alternation_table(np_alternation(c, q, r.policy()), r.policy()));
  } else if (*report) {
    const auto c = r.corpus();
    ReportConfig cfg;
    cfg.data_path = o.data;
    cfg.methods = r.methods(c);
    cfg.with_human = o.with_human;
    cfg.seed = o.seed;
    if (o.window == 0) throw ConfigError("window must be >= 1");
    cfg.window = o.window;
    cfg.jobs = o.jobs;
    cfg.trials = o.trials;
    cfg.format = r.format();
    cfg.yates = o.yates;
    cfg.pos_tags = split_list(o.tags);
    std::tie(cfg.target_mean, cfg.target_sd) = parse_target();
    cfg.probes = split_list(o.probes);
    if (!cfg.probes.empty() && cfg.probes.size() != 2) {
      throw ConfigError("--probes needs exactly two methods");
    }
    cfg.consensus = split_list(o.consensus);
    cfg.pattern = split_list(o.pattern);
    const auto artifacts = run_report(c, cfg, o.out);
    std::cerr << "wrote " << artifacts.size() << " artifacts to " << o.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const attagree::ParseError& e) {
    std::cerr << "error: data: " << e.what() << "\n";
    return 2;
  } catch (const attagree::ValidationError& e) {
    std::cerr << "error: data: " << e.what() << "\n";
    return 2;
  } catch (const attagree::ConfigError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 1;
  }
}
