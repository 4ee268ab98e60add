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

#ifndef SUBCOVER_SUBMODULAR_CHECK_HPP_
#define SUBCOVER_SUBMODULAR_CHECK_HPP_

#include <cstdint>
#include <vector>

#include "subcover/element.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

struct SubmodularCheckReport {
  std::size_t trials = 0;      // chains actually sampled
  std::size_t violations = 0;  // failed checks beyond the 1e-9 tolerance
  double worst_gap = 0.0;      // largest violation magnitude, 0 if none
};

/**
 * Samples random chains S ⊆ T ⊆ universe and an element e ∉ T, then checks
 *   monotonicity:   gain(S, e) >= -1e-9 and gain(T, e) >= -1e-9,
 *   submodularity:  gain(S, e) >= gain(T, e) - 1e-9,
 *   consistency:    gain(T, e) == value(T ∪ {e}) - value(T) within 1e-9.
 * Deterministic for a fixed seed. An empty universe yields a zero-trial
 * report.
 */
SubmodularCheckReport check_submodular_monotone(
    const UtilityOracle& oracle, const std::vector<ElementId>& universe,
    std::size_t trials, std::uint64_t seed);

}  // namespace subcover

#endif  // SUBCOVER_SUBMODULAR_CHECK_HPP_
