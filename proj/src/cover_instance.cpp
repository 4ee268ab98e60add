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

#include "subcover/cover_instance.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "subcover/textio.hpp"

namespace subcover {

void CoverInstance::validate() const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const ElementId e : sets[i]) {
      if (e >= universe_size) {
        throw std::invalid_argument("set " + std::to_string(i) +
                                    " references element " +
                                    std::to_string(e) + " outside universe " +
                                    std::to_string(universe_size));
      }
    }
  }
  if (!labels.empty() && labels.size() != sets.size()) {
    throw std::invalid_argument("label count does not match set count");
  }
}

CoverInstance read_cover_instance(std::istream& in,
                                  const std::string& source_name) {
  LineScanner scanner(in, source_name);
  std::string_view line;
  if (!scanner.next(line)) {
    throw std::runtime_error(scanner.where("missing `n m` header"));
  }
  const auto header = split_fields(line);
  if (header.size() != 2) {
    throw std::runtime_error(
        scanner.where("header must be exactly `n m`, got " +
                      std::to_string(header.size()) + " fields"));
  }
  const std::uint64_t n = parse_unsigned(header[0], scanner);
  const std::uint64_t m = parse_unsigned(header[1], scanner);
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw std::runtime_error(scanner.where("universe size too large"));
  }

  CoverInstance instance;
  instance.universe_size = static_cast<std::uint32_t>(n);
  instance.sets.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!scanner.next(line)) {
      throw std::runtime_error(scanner.where(
          "expected " + std::to_string(m) + " set lines, found only " +
          std::to_string(i)));
    }
    std::vector<ElementId> set;
    for (const std::string_view token : split_fields(line)) {
      const std::uint64_t id = parse_unsigned(token, scanner);
      if (id >= n) {
        throw std::runtime_error(
            scanner.where("element " + std::to_string(id) +
                          " outside universe of size " + std::to_string(n)));
      }
      set.push_back(static_cast<ElementId>(id));
    }
    instance.sets.push_back(std::move(set));
  }
  if (scanner.next(line)) {
    throw std::runtime_error(
        scanner.where("trailing content after the last declared set"));
  }
  return instance;
}

CoverInstance load_cover_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_cover_instance(in, path);
}

void write_cover_instance(std::ostream& out, const CoverInstance& instance) {
  instance.validate();
  out << instance.universe_size << ' ' << instance.sets.size() << '\n';
  for (const auto& set : instance.sets) {
    if (set.empty()) {
      throw std::invalid_argument(
          "empty sets are not representable in the text format");
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) out << ' ';
      out << set[i];
    }
    out << '\n';
  }
}

}  // namespace subcover
