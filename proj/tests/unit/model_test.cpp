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

#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

#include "attagree/corpus_io.hpp"
#include "attagree/model.hpp"
#include "test_util.hpp"

namespace attagree {
namespace {

using testing::make_instance;

const char* kLineA =
    R"({"id":"a","label":"entailment","tokens":[{"text":"the","pos":"DET","is_stop":true,"is_punct":false},)"
    R"({"text":"dog","pos":"NOUN","is_stop":false,"is_punct":false},)"
    R"({"text":".","pos":"PUNCT","is_stop":false,"is_punct":true}],)"
    R"("spans":[{"start":0,"end":2,"label":"NP"},{"start":2,"end":3,"label":"PUNCT"}],)"
    R"("profiles":{"LIME":[0.1,0.7,-0.2],"VanGrad":[0.3,0.2,0.1]},"human":[0.0,1.0,0.0]})";
const char* kLineB =
    R"({"id":"b","label":"neutral","tokens":[{"text":"cats","pos":"NOUN","is_stop":false,"is_punct":false},)"
    R"({"text":"sleep","pos":"VERB","is_stop":false,"is_punct":false}],)"
    R"("spans":[{"start":0,"end":1,"label":"NP"},{"start":1,"end":2,"label":"VP"}],)"
    R"("profiles":{"LIME":[0.5,0.25],"VanGrad":[1e-3,2.5]},"human":[0.3333333333333333,0.6666666666666666]})";

Corpus load_string(const std::string& s, LoadOptions o = {}) {
  std::istringstream in(s);
  return load_corpus(in, o);
}

// Returns the field named by the validation error, or "<none>".
std::string rejected_field(const std::string& text) {
  try {
    load_string(text);
  } catch (const ValidationError& e) {
    return e.field();
  } catch (const ParseError& e) {
    return "parse";
  }
  return "<none>";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

TEST(LoadCorpus, WellFormedTwoLines) {
  const auto c = load_string(std::string(kLineA) + "\n" + kLineB + "\n");
  ASSERT_EQ(c.instances.size(), 2u);
  EXPECT_EQ(c.methods, (std::vector<std::string>{"LIME", "VanGrad"}));
  EXPECT_EQ(c.instances[0].tokens[2].text, ".");
  EXPECT_TRUE(c.instances[0].tokens[2].is_punct);
  EXPECT_EQ(c.instances[1].spans[1].label, "VP");
  EXPECT_DOUBLE_EQ(c.instances[1].find_profile("VanGrad")->scores[0], 1e-3);
}

TEST(LoadCorpus, SkipsBlankLines) {
  const auto c = load_string(std::string("\n") + kLineA + "\n\n  \n" + kLineB);
  EXPECT_EQ(c.instances.size(), 2u);
}

TEST(LoadCorpus, LengthMismatchNamesInstanceAndField) {
  const auto bad = replace(kLineB, "\"LIME\":[0.5,0.25]", "\"LIME\":[0.5]");
  try {
    load_string(std::string(kLineA) + "\n" + bad);
    FAIL() << "expected rejection";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.instance_id(), "b");
    EXPECT_EQ(e.field(), "profiles.LIME");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("instance 'b'"), std::string::npos);
  }
}

TEST(LoadCorpus, PunctuationInsideChunkRejected) {
  const auto bad = replace(
      kLineA, R"([{"start":0,"end":2,"label":"NP"},{"start":2,"end":3,"label":"PUNCT"}])",
      R"([{"start":0,"end":3,"label":"NP"}])");
  EXPECT_EQ(rejected_field(bad), "spans");
}

TEST(LoadCorpus, ParseErrorCarriesLineNumber) {
  try {
    load_string(std::string(kLineA) + "\n{not json\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadCorpus, InconsistentMethodsRejectedUnlessPartialAllowed) {
  const auto b = replace(kLineB, R"(,"VanGrad":[1e-3,2.5])", "");
  EXPECT_THROW(load_string(std::string(kLineA) + "\n" + b), ValidationError);
  LoadOptions lax;
  lax.require_consistent_methods = false;
  const auto c = load_string(std::string(kLineA) + "\n" + b, lax);
  EXPECT_EQ(c.methods, (std::vector<std::string>{"LIME"}));
}

TEST(LoadCorpus, DuplicateIdRejected) {
  EXPECT_EQ(rejected_field(std::string(kLineA) + "\n" + kLineA), "id");
}

// Each fixture breaks exactly one invariant; the error must name it.
TEST(LoadCorpus, RejectionIsTotal) {
  struct Case {
    std::string from, to, field;
  };
  const std::vector<Case> cases = {
      {R"("text":"dog")", R"("text":"")", "tokens"},
      {R"("text":".","pos":"PUNCT")", R"("text":".","pos":"X")", "tokens"},
      {R"("end":3,"label":"PUNCT")", R"("end":4,"label":"PUNCT")", "spans"},
      {R"({"start":2,"end":3,"label":"PUNCT"})", "", "spans"},  // gap / coverage
      {R"("label":"PUNCT"})", R"("label":"O"})", "spans"},
      {R"("LIME":[0.1,0.7,-0.2])", R"("LIME":[0.1,0.7])", "profiles.LIME"},
      {R"("human":[0.0,1.0,0.0])", R"("human":[0.0,1.5,0.0])", "human"},
      {R"("human":[0.0,1.0,0.0])", R"("human":[0.0,1.0])", "human"},
      {R"("VanGrad":)", R"("human":)", "profiles"},
      {R"("id":"a")", R"("id":"")", "id"},
  };
  for (const auto& c : cases) {
    std::string text = replace(kLineA, c.from, c.to);
    if (c.to.empty()) text = replace(text, "},]", "}]");
    EXPECT_EQ(rejected_field(text), c.field) << c.from << " -> " << c.to;
  }
  // No tokens at all.
  Instance empty = make_instance("e", 0);
  try {
    validate_instance(empty);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "tokens");
  }
  // Non-finite score (not expressible in JSON; checked on the type).
  Instance nan = make_instance("n", 2, {{"M", {0.1, std::nan("")}}});
  try {
    validate_instance(nan);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "profiles.M");
  }
}

TEST(LoadCorpus, RoundTripIsIdentity) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto c = testing::random_corpus(rng, 5, {"A", "B", "C"});
    const auto text = serialize_corpus(c);
    const auto back = load_string(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize_corpus(back), text);
  }
}

TEST(LoadCorpus, FixtureFileLoads) {
  const auto c = load_corpus(std::string(ATTAGREE_FIXTURE));
  EXPECT_GE(c.instances.size(), 10u);
  EXPECT_LE(c.instances.size(), 50u);
  EXPECT_EQ(c.methods.size(), 6u);
  EXPECT_EQ(serialize_corpus(load_string(serialize_corpus(c))), serialize_corpus(c));
}

TEST(LoadCorpus, MissingFileIsConfigError) {
  EXPECT_THROW(load_corpus(std::string("/nonexistent/corpus.jsonl")), ConfigError);
}

// ---------------------------------------------------------------------------

Instance punct_instance(std::size_t n, std::set<std::size_t> punct, std::vector<Span> spans) {
  Instance inst = make_instance("p", n);
  for (auto i : punct) inst.tokens[i] = {".", std::string(kPunctTag), false, true};
  inst.spans = std::move(spans);
  return inst;
}

TEST(NormalizePunctSpans, SplitsTrailingPunctuation) {
  const auto out = normalize_punct_spans(punct_instance(3, {2}, {{0, 3, "NP"}}));
  EXPECT_EQ(out.spans, (std::vector<Span>{{0, 2, "NP"}, {2, 3, "PUNCT"}}));
}

TEST(NormalizePunctSpans, IdentityWithoutPunctuation) {
  const auto in = punct_instance(4, {}, {{0, 2, "NP"}, {2, 4, "VP"}});
  EXPECT_EQ(normalize_punct_spans(in), in);
}

TEST(NormalizePunctSpans, PunctuationAtSpanStart) {
  const auto out = normalize_punct_spans(punct_instance(2, {0}, {{0, 2, "NP"}}));
  EXPECT_EQ(out.spans, (std::vector<Span>{{0, 1, "PUNCT"}, {1, 2, "NP"}}));
}

// Every punctuation placement and every partition of a 3-token sentence.
TEST(NormalizePunctSpans, AllPlacementsRestorePartition) {
  const std::vector<std::vector<Span>> partitions = {
      {{0, 3, "NP"}},
      {{0, 1, "NP"}, {1, 3, "VP"}},
      {{0, 2, "NP"}, {2, 3, "VP"}},
      {{0, 1, "NP"}, {1, 2, "VP"}, {2, 3, "PP"}},
  };
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::set<std::size_t> punct;
    for (std::size_t i = 0; i < 3; ++i) {
      if (mask & (1u << i)) punct.insert(i);
    }
    for (const auto& part : partitions) {
      const auto out = normalize_punct_spans(punct_instance(3, punct, part));
      EXPECT_NO_THROW(validate_instance(out)) << "mask " << mask;
      std::multiset<std::size_t> covered;
      for (const auto& s : out.spans) {
        for (auto i = s.start; i < s.end; ++i) covered.insert(i);
      }
      EXPECT_EQ(covered, (std::multiset<std::size_t>{0, 1, 2}));
      // Non-punctuation boundaries of the input survive.
      for (const auto& s : part) {
        const bool starts = std::any_of(out.spans.begin(), out.spans.end(),
                                        [&](const Span& o) { return o.start == s.start; });
        EXPECT_TRUE(starts);
      }
    }
  }
}

// ---------------------------------------------------------------------------

TEST(PolicyParse, AcceptsGrammar) {
  EXPECT_EQ(parse_policy("fixed:4"), KPolicy::fixed(4));
  EXPECT_EQ(parse_policy("dynamic:mean"), KPolicy::dynamic(ThresholdKind::kMean, false));
  EXPECT_EQ(parse_policy("dynamic:mean+2sd:pos"),
            KPolicy::dynamic(ThresholdKind::kMeanPlus2Sd, true));
  EXPECT_EQ(parse_policy("dynamic:median:pos", 3),
            KPolicy::dynamic(ThresholdKind::kMedian, true, 3));
  for (auto kind : kAllThresholdKinds) {
    for (bool pos : {false, true}) {
      const auto p = KPolicy::dynamic(kind, pos);
      EXPECT_EQ(parse_policy(p.to_string()), p);
    }
  }
}

TEST(PolicyParse, RejectsMalformed) {
  for (const char* bad : {"fixed:0", "fixed:", "fixed:-1", "fixed:x", "dynamic",
                          "dynamic:mode", "dynamic:mean:neg", "dynamic:mean:pos:x", "topk:4",
                          ""}) {
    EXPECT_THROW(parse_policy(bad), ConfigError) << bad;
  }
  EXPECT_THROW(parse_policy("dynamic:mean", 0), ConfigError);
  EXPECT_THROW(KPolicy::fixed(0), ConfigError);
}

}  // namespace
}  // namespace attagree
