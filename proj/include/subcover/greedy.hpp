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

#ifndef SUBCOVER_GREEDY_HPP_
#define SUBCOVER_GREEDY_HPP_

// Offline comparators. All of them take the whole ground set up front and a
// target utility; ties between equal gains always break toward the lowest
// element id, which makes the eager and lazy variants produce identical pick
// sequences.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "subcover/element.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

struct GreedyTrace {
  std::vector<ElementId> picks;
  std::vector<double> gains;            // marginal gain of each pick
  std::vector<double> utilities;        // cumulative f after each pick
  std::vector<std::uint64_t> calls_at;  // cumulative gain calls at each pick
  CallCounterSnapshot calls;            // total calls consumed by the run
  double achieved = 0.0;                // final utility
  bool feasible = true;                 // false: target unreachable
};

/**
 * Eager greedy: repeatedly picks the element with the largest marginal gain
 * until f reaches (1-epsilon)·Q - 1e-9. epsilon = 0 is the full cover;
 * epsilon in (0, 1) stops at the partial-cover target. When no remaining
 * element has positive gain before the target is met, the trace so far is
 * returned with feasible = false.
 */
GreedyTrace greedy_cover(const UtilityOracle& oracle,
                         const std::vector<ElementId>& ground, double q,
                         double epsilon);

/**
 * Lazy greedy: identical pick sequence to greedy_cover, driven by a
 * max-priority queue of stale upper bounds that are re-evaluated before
 * acceptance (valid because gains only shrink as the solution grows). Never
 * spends more gain calls than the eager variant.
 */
GreedyTrace lazy_greedy_cover(const UtilityOracle& oracle,
                              const std::vector<ElementId>& ground, double q,
                              double epsilon);

/**
 * Walks a seeded random permutation of the ground set, keeping every element
 * with positive marginal gain, until target_utility is reached. Deterministic
 * for a fixed seed.
 */
GreedyTrace random_baseline(const UtilityOracle& oracle,
                            const std::vector<ElementId>& ground,
                            double target_utility, std::uint64_t seed);

struct OptResult {
  bool feasible = true;
  std::size_t k_star = 0;
  std::vector<ElementId> witness;
};

/**
 * Exact minimum cover size by exhaustive search over subsets in increasing
 * cardinality; |ground| must be <= 22. Used by tests as the independent
 * optimum oracle.
 */
OptResult brute_force_kstar(const UtilityOracle& oracle,
                            const std::vector<ElementId>& ground, double q);

/** CSV columns: step,element,gain,utility,calls. */
void write_trace_csv(std::ostream& out, const GreedyTrace& trace);

}  // namespace subcover

#endif  // SUBCOVER_GREEDY_HPP_
