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

#include "subcover/coverage.hpp"

#include <algorithm>

namespace subcover {
namespace {

// Covered-universe bit vector plus its population count. covered_count is
// maintained incrementally and equals covered.count() at all times.
class CoveredState final : public SolutionState {
 public:
  explicit CoveredState(std::size_t universe) : covered(universe) {}

  std::unique_ptr<SolutionState> clone() const override {
    return std::make_unique<CoveredState>(*this);
  }
  std::size_t memory_bytes() const override { return covered.memory_bytes(); }

  DynamicBitset covered;
  std::size_t covered_count = 0;
};

// Selected-vertex bit vector plus the exact count of edges incident to it.
class IncidenceState final : public SolutionState {
 public:
  explicit IncidenceState(std::size_t n) : selected(n) {}

  std::unique_ptr<SolutionState> clone() const override {
    return std::make_unique<IncidenceState>(*this);
  }
  std::size_t memory_bytes() const override { return selected.memory_bytes(); }

  DynamicBitset selected;
  std::size_t incident_edges = 0;
};

}  // namespace

DominatingSetOracle::DominatingSetOracle(Graph graph)
    : graph_(std::move(graph)) {}

std::size_t DominatingSetOracle::ground_size() const { return graph_.n; }

std::unique_ptr<SolutionState> DominatingSetOracle::make_fresh_state() const {
  return std::make_unique<CoveredState>(graph_.n);
}

double DominatingSetOracle::value_impl(const SolutionState& state) const {
  return static_cast<double>(state_as<CoveredState>(state).covered_count);
}

double DominatingSetOracle::gain_impl(const SolutionState& state,
                                      ElementId e) const {
  const auto& s = state_as<CoveredState>(state);
  std::size_t fresh = s.covered.test(e) ? 0 : 1;
  for (const ElementId u : graph_.adjacency[e]) {
    if (!s.covered.test(u)) ++fresh;
  }
  return static_cast<double>(fresh);
}

void DominatingSetOracle::extend_impl(SolutionState& state,
                                      ElementId e) const {
  auto& s = state_as<CoveredState>(state);
  if (!s.covered.test(e)) {
    s.covered.set(e);
    ++s.covered_count;
  }
  for (const ElementId u : graph_.adjacency[e]) {
    if (!s.covered.test(u)) {
      s.covered.set(u);
      ++s.covered_count;
    }
  }
}

VertexCoverOracle::VertexCoverOracle(Graph graph) : graph_(std::move(graph)) {}

std::size_t VertexCoverOracle::ground_size() const { return graph_.n; }

std::unique_ptr<SolutionState> VertexCoverOracle::make_fresh_state() const {
  return std::make_unique<IncidenceState>(graph_.n);
}

double VertexCoverOracle::value_impl(const SolutionState& state) const {
  return static_cast<double>(state_as<IncidenceState>(state).incident_edges);
}

double VertexCoverOracle::gain_impl(const SolutionState& state,
                                    ElementId e) const {
  const auto& s = state_as<IncidenceState>(state);
  if (s.selected.test(e)) return 0.0;
  // Edge (e, u) is already counted exactly when u is selected.
  std::size_t fresh = 0;
  for (const ElementId u : graph_.adjacency[e]) {
    if (!s.selected.test(u)) ++fresh;
  }
  return static_cast<double>(fresh);
}

void VertexCoverOracle::extend_impl(SolutionState& state, ElementId e) const {
  auto& s = state_as<IncidenceState>(state);
  if (s.selected.test(e)) return;
  for (const ElementId u : graph_.adjacency[e]) {
    if (!s.selected.test(u)) ++s.incident_edges;
  }
  s.selected.set(e);
}

SetCoverOracle::SetCoverOracle(CoverInstance instance)
    : instance_(std::move(instance)) {
  instance_.validate();
  // Duplicate ids inside one set would double-count in gain; evaluate on
  // deduplicated copies while leaving the stored instance untouched.
  eval_sets_.reserve(instance_.sets.size());
  for (const auto& set : instance_.sets) {
    std::vector<ElementId> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    eval_sets_.push_back(std::move(sorted));
  }
}

std::size_t SetCoverOracle::ground_size() const {
  return instance_.sets.size();
}

std::unique_ptr<SolutionState> SetCoverOracle::make_fresh_state() const {
  return std::make_unique<CoveredState>(instance_.universe_size);
}

double SetCoverOracle::value_impl(const SolutionState& state) const {
  return static_cast<double>(state_as<CoveredState>(state).covered_count);
}

double SetCoverOracle::gain_impl(const SolutionState& state,
                                 ElementId e) const {
  const auto& s = state_as<CoveredState>(state);
  std::size_t fresh = 0;
  for (const ElementId x : eval_sets_[e]) {
    if (!s.covered.test(x)) ++fresh;
  }
  return static_cast<double>(fresh);
}

void SetCoverOracle::extend_impl(SolutionState& state, ElementId e) const {
  auto& s = state_as<CoveredState>(state);
  for (const ElementId x : eval_sets_[e]) {
    if (!s.covered.test(x)) {
      s.covered.set(x);
      ++s.covered_count;
    }
  }
}

}  // namespace subcover
