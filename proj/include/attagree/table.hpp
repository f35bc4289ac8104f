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
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "attagree/error.hpp"

// Small tabular output model shared by the CLI and the report writer.
// Numbers carry their own rendering precision so CSV, Markdown and JSON
// agree on every digit.

namespace attagree {

struct Number {
  double value = 0.0;
  int precision = 4;
};

// Empty cell renders as NA (CSV/Markdown) or null (JSON).
using Cell = std::variant<std::monostate, std::string, long long, Number>;

inline Cell num(double v, int precision = 4) { return Number{v, precision}; }
inline Cell num(const std::optional<double>& v, int precision = 4) {
  if (!v) return std::monostate{};
  return Number{*v, precision};
}
inline Cell count(std::size_t v) { return static_cast<long long>(v); }
inline Cell text(std::string v) { return v; }

inline std::string format_fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s = buf;
  if (s.rfind("-", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);  // no "-0.0000"
  }
  return s;
}

inline std::string render(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return "NA";
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const auto& n = std::get<Number>(c);
  return format_fixed(n.value, n.precision);
}

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != header.size()) {
      throw Error("table '" + name + "': row has " + std::to_string(row.size()) +
                  " cells, header has " + std::to_string(header.size()));
    }
    rows.push_back(std::move(row));
  }
};

enum class Format { kCsv, kJson, kMarkdown };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  if (s == "md") return Format::kMarkdown;
  throw ConfigError("unknown format '" + s + "' (expected csv|json|md)");
}

inline std::string extension(Format f) {
  switch (f) {
    case Format::kCsv:
      return ".csv";
    case Format::kJson:
      return ".json";
    case Format::kMarkdown:
      return ".md";
  }
  return "";
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    out << (i ? "," : "") << csv_escape(t.header[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_escape(render(row[i]));
    }
    out << '\n';
  }
}

inline void write_markdown(std::ostream& out, const Table& t) {
  out << '|';
  for (const auto& h : t.header) out << ' ' << h << " |";
  out << "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& row : t.rows) {
    out << '|';
    for (const auto& c : row) out << ' ' << render(c) << " |";
    out << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Table& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      auto& slot = obj[t.header[i]];
      if (std::holds_alternative<std::monostate>(c)) {
        slot = nullptr;
      } else if (const auto* s = std::get_if<std::string>(&c)) {
        slot = *s;
      } else if (const auto* n = std::get_if<long long>(&c)) {
        slot = *n;
      } else {
        // Same digits as the CSV rendering.
        slot = std::stod(render(c));
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

inline void write_table(std::ostream& out, const Table& t, Format f) {
  switch (f) {
    case Format::kCsv:
      write_csv(out, t);
      break;
    case Format::kMarkdown:
      write_markdown(out, t);
      break;
    case Format::kJson:
      out << to_json(t).dump(2) << '\n';
      break;
  }
}

inline std::string to_string(const Table& t, Format f) {
  std::ostringstream out;
  write_table(out, t, f);
  return out.str();
}

}  // namespace attagree
