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

#include "subcover/greedy.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <random>
#include <stdexcept>

#include "rng_util.hpp"
#include "subcover/textio.hpp"

namespace subcover {
namespace {

constexpr double kTol = 1e-9;

void require_epsilon(double epsilon) {
  if (!(epsilon >= 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1)");
  }
}

void record_pick(GreedyTrace& trace, const UtilityOracle& oracle,
                 const CallCounterSnapshot& start, ElementId e, double gain,
                 double utility) {
  trace.picks.push_back(e);
  trace.gains.push_back(gain);
  trace.utilities.push_back(utility);
  trace.calls_at.push_back((oracle.calls() - start).gain_calls);
}

std::vector<ElementId> unique_ids(const std::vector<ElementId>& ground) {
  std::vector<ElementId> ids = ground;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

GreedyTrace greedy_cover(const UtilityOracle& oracle,
                         const std::vector<ElementId>& ground, double q,
                         double epsilon) {
  require_epsilon(epsilon);
  const double target = (1.0 - epsilon) * q - kTol;
  const CallCounterSnapshot start = oracle.calls();

  GreedyTrace trace;
  double current = 0.0;
  if (current >= target) {
    trace.calls = oracle.calls() - start;
    return trace;
  }

  const std::vector<ElementId> candidates = unique_ids(ground);
  std::vector<bool> picked(candidates.size(), false);
  auto state = oracle.fresh_state();

  while (current < target) {
    double best_gain = 0.0;
    std::size_t best_index = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (picked[i]) continue;
      const double g = oracle.gain(*state, candidates[i]);
      // candidates are sorted ascending, so on ties the earlier (lower) id
      // stays the winner.
      if (g > best_gain) {
        best_gain = g;
        best_index = i;
      }
    }
    if (best_index == candidates.size()) {
      trace.feasible = false;  // no positive gain left, target unreachable
      break;
    }
    oracle.extend(*state, candidates[best_index]);
    picked[best_index] = true;
    current += best_gain;
    record_pick(trace, oracle, start, candidates[best_index], best_gain,
                current);
  }
  trace.achieved = current;
  trace.calls = oracle.calls() - start;
  return trace;
}

GreedyTrace lazy_greedy_cover(const UtilityOracle& oracle,
                              const std::vector<ElementId>& ground, double q,
                              double epsilon) {
  require_epsilon(epsilon);
  const double target = (1.0 - epsilon) * q - kTol;
  const CallCounterSnapshot start = oracle.calls();

  GreedyTrace trace;
  double current = 0.0;
  if (current >= target) {
    trace.calls = oracle.calls() - start;
    return trace;
  }

  struct Entry {
    double bound;       // gain when last evaluated; upper bound now
    ElementId element;
    std::size_t round;  // pick count at evaluation time
  };
  // Max-heap on bound, ties toward the lower element id.
  const auto later = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.element > b.element;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> heap(later);

  auto state = oracle.fresh_state();
  for (const ElementId e : unique_ids(ground)) {
    heap.push({oracle.gain(*state, e), e, 0});
  }

  while (current < target && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.round != trace.picks.size()) {
      // Stale bound: re-evaluate against the current solution and reinsert.
      heap.push({oracle.gain(*state, top.element), top.element,
                 trace.picks.size()});
      continue;
    }
    if (top.bound <= 0.0) {
      trace.feasible = false;  // freshest maximum is non-positive
      break;
    }
    oracle.extend(*state, top.element);
    current += top.bound;
    record_pick(trace, oracle, start, top.element, top.bound, current);
  }
  if (current < target && heap.empty()) trace.feasible = false;
  trace.achieved = current;
  trace.calls = oracle.calls() - start;
  return trace;
}

GreedyTrace random_baseline(const UtilityOracle& oracle,
                            const std::vector<ElementId>& ground,
                            double target_utility, std::uint64_t seed) {
  const double target = target_utility - kTol;
  const CallCounterSnapshot start = oracle.calls();

  GreedyTrace trace;
  double current = 0.0;
  if (current >= target) {
    trace.calls = oracle.calls() - start;
    return trace;
  }

  std::vector<ElementId> order = unique_ids(ground);
  std::mt19937_64 rng(seed);
  internal::fisher_yates(order, rng);

  auto state = oracle.fresh_state();
  for (const ElementId e : order) {
    const double g = oracle.gain(*state, e);
    if (g > 0.0) {
      oracle.extend(*state, e);
      current += g;
      record_pick(trace, oracle, start, e, g, current);
      if (current >= target) break;
    }
  }
  if (current < target) trace.feasible = false;
  trace.achieved = current;
  trace.calls = oracle.calls() - start;
  return trace;
}

namespace {

// Depth-first combination walk in lexicographic index order, sharing the
// solution state of the common prefix. Returns true when a subset of size
// `want` starting from `from` reaches the target.
bool extend_search(const UtilityOracle& oracle,
                   const std::vector<ElementId>& ids, double target,
                   const SolutionState& state, std::size_t from,
                   std::size_t want, std::vector<ElementId>& chosen) {
  if (want == 0) return oracle.value(state) >= target;
  for (std::size_t i = from; i + want <= ids.size(); ++i) {
    auto next = state.clone();
    oracle.extend(*next, ids[i]);
    chosen.push_back(ids[i]);
    if (extend_search(oracle, ids, target, *next, i + 1, want - 1, chosen)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

OptResult brute_force_kstar(const UtilityOracle& oracle,
                            const std::vector<ElementId>& ground, double q) {
  const std::vector<ElementId> ids = unique_ids(ground);
  if (ids.size() > 22) {
    throw std::invalid_argument(
        "ground set too large for exhaustive search (limit 22)");
  }
  const double target = q - kTol;

  OptResult result;
  if (0.0 >= target) return result;  // k* = 0

  // Feasibility: the whole ground set is the best any subset can do.
  {
    auto all = oracle.fresh_state();
    for (const ElementId e : ids) oracle.extend(*all, e);
    if (oracle.value(*all) < target) {
      result.feasible = false;
      return result;
    }
  }

  for (std::size_t c = 1; c <= ids.size(); ++c) {
    std::vector<ElementId> chosen;
    auto empty = oracle.fresh_state();
    if (extend_search(oracle, ids, target, *empty, 0, c, chosen)) {
      result.k_star = c;
      result.witness = std::move(chosen);
      return result;
    }
  }
  // Unreachable: the feasibility check guarantees c = |ids| succeeds.
  throw std::logic_error("exhaustive search missed the full ground set");
}

void write_trace_csv(std::ostream& out, const GreedyTrace& trace) {
  out << "step,element,gain,utility,calls\n";
  for (std::size_t i = 0; i < trace.picks.size(); ++i) {
    out << (i + 1) << ',' << trace.picks[i] << ','
        << format_double(trace.gains[i]) << ','
        << format_double(trace.utilities[i]) << ',' << trace.calls_at[i]
        << '\n';
  }
}

}  // namespace subcover
