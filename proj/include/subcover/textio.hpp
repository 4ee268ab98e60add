// Copyright 2026 The Authors.
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

#ifndef SUBCOVER_TEXTIO_HPP_
#define SUBCOVER_TEXTIO_HPP_

// Small text helpers shared by the instance readers and CSV writers. All
// numeric formatting goes through format_double so output is byte-identical
// across runs and round-trips exactly.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subcover {

/** Shortest decimal form that parses back to the same double. */
std::string format_double(double x);

/** Drops everything from the first '#' and trims surrounding whitespace. */
std::string_view strip_comment(std::string_view line);

/** Splits on runs of spaces/tabs; no empty tokens. */
std::vector<std::string_view> split_fields(std::string_view line);

/**
 * Line-oriented reader over an input stream that skips blank and comment-only
 * lines and remembers 1-based line numbers for error messages.
 */
class LineScanner {
 public:
  LineScanner(std::istream& in, std::string source_name);

  /** Next significant line, stripped; false at end of input. */
  bool next(std::string_view& line);

  std::size_t line_number() const { return line_number_; }

  /** "<source>:<line>: <message>" for exceptions. */
  std::string where(std::string_view message) const;

 private:
  std::istream& in_;
  std::string source_;
  std::string current_;
  std::string stripped_;
  std::size_t line_number_ = 0;
};

/** Parses a non-negative integer; throws std::runtime_error with context. */
std::uint64_t parse_unsigned(std::string_view token, const LineScanner& at);

/** Parses a double; throws std::runtime_error with context. */
double parse_double(std::string_view token, const LineScanner& at);

}  // namespace subcover

#endif  // SUBCOVER_TEXTIO_HPP_
