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

#include <sstream>
#include <string>

#include "gtest/gtest.h"

#include "attagree/report.hpp"
#include "attagree/table.hpp"

namespace attagree {
namespace {

Table sample() {
  Table t{"sample", {"name", "value", "n"}};
  t.add_row({text("a,b"), num(0.123456), count(3)});
  t.add_row({text("say \"hi\""), num(std::optional<double>{}), count(0)});
  t.add_row({text("neg"), num(-0.00001), count(1)});
  return t;
}

TEST(Table, Csv) {
  EXPECT_EQ(to_string(sample(), Format::kCsv),
            "name,value,n\n\"a,b\",0.1235,3\n\"say \"\"hi\"\"\",NA,0\nneg,0.0000,1\n");
}

TEST(Table, Markdown) {
  const auto md = to_string(sample(), Format::kMarkdown);
  EXPECT_EQ(md.substr(0, md.find('\n')), "| name | value | n |");
  EXPECT_NE(md.find("| --- | --- | --- |"), std::string::npos);
  EXPECT_NE(md.find("| NA |"), std::string::npos);
}

TEST(Table, JsonKeepsColumnOrderAndNulls) {
  const auto j = nlohmann::ordered_json::parse(to_string(sample(), Format::kJson));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].begin().key(), "name");
  EXPECT_DOUBLE_EQ(j[0]["value"].get<double>(), 0.1235);
  EXPECT_TRUE(j[1]["value"].is_null());
  EXPECT_EQ(j[0]["n"].get<long long>(), 3);
}

TEST(Table, RejectsRaggedRow) {
  Table t{"t", {"a", "b"}};
  EXPECT_THROW(t.add_row({count(1)}), Error);
}

TEST(Table, FormatParsing) {
  EXPECT_EQ(parse_format("json"), Format::kJson);
  EXPECT_EQ(extension(parse_format("md")), ".md");
  EXPECT_THROW(parse_format("xml"), ConfigError);
  EXPECT_EQ(format_fixed(-0.0, 2), "0.00");
  EXPECT_EQ(format_fixed(-0.5, 1), "-0.5");
}

}  // namespace
}  // namespace attagree
