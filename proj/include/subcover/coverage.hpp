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

#ifndef SUBCOVER_COVERAGE_HPP_
#define SUBCOVER_COVERAGE_HPP_

// Integer-valued coverage utilities. All three are monotone submodular by
// construction and their gains are exact integers, so incremental state must
// agree with recompute-from-scratch exactly, not just within tolerance.

#include <memory>

#include "subcover/bitset.hpp"
#include "subcover/cover_instance.hpp"
#include "subcover/graph.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

/**
 * Dominating-set utility: f(S) = |ρ(S) ∪ S|, the number of vertices that are
 * in S or adjacent to it. Ground elements are vertices.
 */
class DominatingSetOracle final : public UtilityOracle {
 public:
  explicit DominatingSetOracle(Graph graph);

  std::size_t ground_size() const override;
  const Graph& graph() const { return graph_; }

 protected:
  std::unique_ptr<SolutionState> make_fresh_state() const override;
  double value_impl(const SolutionState& state) const override;
  double gain_impl(const SolutionState& state, ElementId e) const override;
  void extend_impl(SolutionState& state, ElementId e) const override;

 private:
  Graph graph_;
};

/**
 * Vertex-cover utility: f(S) = |δ(S)|, the number of edges with at least one
 * endpoint in S. Ground elements are vertices; the state keeps the selected
 * set and an exact incident-edge counter, so gain(v) is degree(v) minus the
 * edges from v into S.
 */
class VertexCoverOracle final : public UtilityOracle {
 public:
  explicit VertexCoverOracle(Graph graph);

  std::size_t ground_size() const override;
  const Graph& graph() const { return graph_; }

 protected:
  std::unique_ptr<SolutionState> make_fresh_state() const override;
  double value_impl(const SolutionState& state) const override;
  double gain_impl(const SolutionState& state, ElementId e) const override;
  void extend_impl(SolutionState& state, ElementId e) const override;

 private:
  Graph graph_;
};

/**
 * Set-system coverage: ground elements are set ids of the instance family,
 * f(S) = |union of the chosen sets|.
 */
class SetCoverOracle final : public UtilityOracle {
 public:
  explicit SetCoverOracle(CoverInstance instance);

  std::size_t ground_size() const override;
  const CoverInstance& instance() const { return instance_; }

 protected:
  std::unique_ptr<SolutionState> make_fresh_state() const override;
  double value_impl(const SolutionState& state) const override;
  double gain_impl(const SolutionState& state, ElementId e) const override;
  void extend_impl(SolutionState& state, ElementId e) const override;

 private:
  CoverInstance instance_;
  std::vector<std::vector<ElementId>> eval_sets_;  // per-set deduplicated ids
};

}  // namespace subcover

#endif  // SUBCOVER_COVERAGE_HPP_
