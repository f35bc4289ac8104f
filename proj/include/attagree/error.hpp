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
#include <stdexcept>
#include <string>
#include <utility>

namespace attagree {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user configuration: policy strings, unknown names, invalid parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A corpus line that is not valid JSON or does not follow the schema shape.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A well-formed record that violates a data invariant. `field` names the
// offending field (e.g. "spans", "profiles.LIME", "human").
class ValidationError : public Error {
 public:
  ValidationError(std::string instance_id, std::string field,
                   const std::string& what, std::size_t line = 0)
      : Error(format(instance_id, field, what, line)),
        instance_id_(std::move(instance_id)),
        field_(std::move(field)),
        message_(what),
        line_(line) {}

  const std::string& instance_id() const noexcept { return instance_id_; }
  const std::string& field() const noexcept { return field_; }
  // The violation itself, without the instance/field/line prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& id, const std::string& field,
                            const std::string& what, std::size_t line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    out += "instance '" + id + "': " + field + ": " + what;
    return out;
  }

  std::string instance_id_;
  std::string field_;
  std::string message_;
  std::size_t line_;
};

// Chi-square table with a zero expected count.
class DegenerateTableError : public Error {
 public:
  DegenerateTableError(std::size_t row, std::size_t col)
      : Error("degenerate contingency table: zero expected count at cell (" +
              std::to_string(row) + "," + std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace attagree
