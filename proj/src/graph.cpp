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

#include "subcover/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "subcover/textio.hpp"

namespace subcover {
namespace {

void sort_dedupe(std::vector<std::vector<ElementId>>& adjacency) {
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

}  // namespace

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency) twice += list.size();
  return twice / 2;
}

Graph graph_from_edges(
    const std::vector<std::pair<ElementId, ElementId>>& edges,
    std::uint32_t n_hint) {
  std::uint64_t n = n_hint;
  for (const auto& [u, v] : edges) {
    n = std::max<std::uint64_t>(n, std::uint64_t{u} + 1);
    n = std::max<std::uint64_t>(n, std::uint64_t{v} + 1);
  }
  Graph g;
  g.n = static_cast<std::uint32_t>(n);
  g.adjacency.resize(g.n);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  sort_dedupe(g.adjacency);
  return g;
}

Graph read_edge_list(std::istream& in, const std::string& source_name) {
  LineScanner scanner(in, source_name);
  std::vector<std::pair<ElementId, ElementId>> edges;
  std::string_view line;
  while (scanner.next(line)) {
    const auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw std::runtime_error(
          scanner.where("expected `u v`, got " +
                        std::to_string(fields.size()) + " fields"));
    }
    const std::uint64_t u = parse_unsigned(fields[0], scanner);
    const std::uint64_t v = parse_unsigned(fields[1], scanner);
    if (u > std::numeric_limits<ElementId>::max() ||
        v > std::numeric_limits<ElementId>::max()) {
      throw std::runtime_error(scanner.where("vertex id too large"));
    }
    edges.emplace_back(static_cast<ElementId>(u), static_cast<ElementId>(v));
  }
  return graph_from_edges(edges);
}

Graph read_adjacency(std::istream& in, const std::string& source_name) {
  LineScanner scanner(in, source_name);
  std::string_view line;
  if (!scanner.next(line)) {
    throw std::runtime_error(scanner.where("missing vertex-count header"));
  }
  const auto header = split_fields(line);
  if (header.size() != 1) {
    throw std::runtime_error(scanner.where("header must be a single `n`"));
  }
  const std::uint64_t n = parse_unsigned(header[0], scanner);
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw std::runtime_error(scanner.where("vertex count too large"));
  }

  Graph g;
  g.n = static_cast<std::uint32_t>(n);
  g.adjacency.resize(g.n);
  while (scanner.next(line)) {
    const auto fields = split_fields(line);
    const std::uint64_t v = parse_unsigned(fields[0], scanner);
    if (v >= n) {
      throw std::runtime_error(scanner.where(
          "vertex " + std::to_string(v) + " outside declared count " +
          std::to_string(n)));
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::uint64_t u = parse_unsigned(fields[i], scanner);
      if (u >= n) {
        throw std::runtime_error(scanner.where(
            "neighbor " + std::to_string(u) + " outside declared count " +
            std::to_string(n)));
      }
      if (u == v) continue;
      g.adjacency[v].push_back(static_cast<ElementId>(u));
      g.adjacency[u].push_back(static_cast<ElementId>(v));
    }
  }
  sort_dedupe(g.adjacency);
  return g;
}

Graph load_graph(const std::string& path, bool adjacency_format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return adjacency_format ? read_adjacency(in, path)
                          : read_edge_list(in, path);
}

}  // namespace subcover
