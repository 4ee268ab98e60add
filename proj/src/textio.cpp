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

#include "subcover/textio.hpp"

#include <charconv>
#include <istream>
#include <stdexcept>
#include <system_error>

namespace subcover {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string_view strip_comment(std::string_view line) {
  const std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  const std::size_t first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const std::size_t last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

LineScanner::LineScanner(std::istream& in, std::string source_name)
    : in_(in), source_(std::move(source_name)) {}

bool LineScanner::next(std::string_view& line) {
  while (std::getline(in_, current_)) {
    ++line_number_;
    const std::string_view stripped = strip_comment(current_);
    if (!stripped.empty()) {
      stripped_ = std::string(stripped);
      line = stripped_;
      return true;
    }
  }
  return false;
}

std::string LineScanner::where(std::string_view message) const {
  return source_ + ":" + std::to_string(line_number_) + ": " +
         std::string(message);
}

std::uint64_t parse_unsigned(std::string_view token, const LineScanner& at) {
  std::uint64_t value = 0;
  const auto res = std::from_chars(token.begin(), token.end(), value);
  if (res.ec != std::errc{} || res.ptr != token.end()) {
    throw std::runtime_error(
        at.where("expected a non-negative integer, got '" +
                 std::string(token) + "'"));
  }
  return value;
}

double parse_double(std::string_view token, const LineScanner& at) {
  double value = 0.0;
  const auto res = std::from_chars(token.begin(), token.end(), value);
  if (res.ec != std::errc{} || res.ptr != token.end()) {
    throw std::runtime_error(
        at.where("expected a number, got '" + std::string(token) + "'"));
  }
  return value;
}

}  // namespace subcover
