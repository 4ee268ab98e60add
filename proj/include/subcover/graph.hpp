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

#ifndef SUBCOVER_GRAPH_HPP_
#define SUBCOVER_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subcover/element.hpp"

namespace subcover {

/**
 * Undirected simple graph. After construction the adjacency lists are
 * symmetric (u in adj(v) iff v in adj(u)), sorted, deduplicated, and free of
 * self-loops; directed inputs are symmetrized on load.
 */
struct Graph {
  std::uint32_t n = 0;
  std::vector<std::vector<ElementId>> adjacency;

  std::size_t degree(ElementId v) const { return adjacency[v].size(); }

  /** Undirected edge count. */
  std::size_t edge_count() const;
};

/**
 * Builds a graph from (possibly directed, possibly duplicated) edges.
 * Self-loops are dropped. Vertex count is max(n_hint, max id + 1).
 */
Graph graph_from_edges(
    const std::vector<std::pair<ElementId, ElementId>>& edges,
    std::uint32_t n_hint = 0);

/**
 * Edge-list format: one `u v` pair per line, `#` comments. No header; the
 * vertex count is max id + 1.
 */
Graph read_edge_list(std::istream& in,
                     const std::string& source_name = "<input>");

/**
 * Adjacency format for the vertex-stream model, where each stream item
 * carries its own neighbor list: header line `n`, then lines `v u1 u2 ...`
 * (vertex id first, then its neighbors, possibly none). Vertices may appear
 * on any number of lines; missing vertices are isolated.
 */
Graph read_adjacency(std::istream& in,
                     const std::string& source_name = "<input>");

Graph load_graph(const std::string& path, bool adjacency_format);

}  // namespace subcover

#endif  // SUBCOVER_GRAPH_HPP_
