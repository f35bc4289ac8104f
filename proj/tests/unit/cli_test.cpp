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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "gtest/gtest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ATTAGREE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kData = std::string("--data ") + ATTAGREE_FIXTURE;

TEST(Cli, ValidateFixture) {
  const auto r = run(std::string("validate ") + ATTAGREE_FIXTURE);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("40 instances"), std::string::npos);
}

TEST(Cli, ConfigErrorsExitOne) {
  EXPECT_EQ(run("agreement " + kData + " --policy fixed:0").code, 1);
  EXPECT_EQ(run("agreement " + kData + " --methods LIME,Nope").code, 1);
  EXPECT_EQ(run("agreement --data /nonexistent.jsonl").code, 1);
  EXPECT_EQ(run("agreement " + kData + " --format xml").code, 1);
}

TEST(Cli, DataErrorsExitTwo) {
  const std::string path = ::testing::TempDir() + "bad_corpus.jsonl";
  std::ofstream(path) << "{\"id\": \"x\"}\n";
  EXPECT_EQ(run("validate " + path).code, 2);
  EXPECT_EQ(run("agreement --data " + path).code, 2);
}

TEST(Cli, AgreementIsByteStable) {
  const std::string args = "agreement " + kData + " --policy dynamic:mean:pos --level span";
  const auto a = run(args);
  const auto b = run(args + " --jobs 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 5), "name,");
}

TEST(Cli, RandomVectorsNearExpectation) {
  const auto r = run("baseline random-vectors --len 100 --ones 16 --trials 1000 --seed 7");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  // level,source,length,ones,trials,seed,baseline,exact
  std::vector<std::string> cells;
  std::stringstream ss(row);
  for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
  ASSERT_EQ(cells.size(), 8u);
  const double v = std::stod(cells[6]);
  EXPECT_GE(v, 0.53);
  EXPECT_LE(v, 0.55);
}

TEST(Cli, JsonOutputParses) {
  const auto r = run("spans " + kData + " --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_NE(r.out.find("\"span_stats\""), std::string::npos);
}

}  // namespace
