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

#include "subcover/submodular_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rng_util.hpp"

namespace subcover {
namespace {

constexpr double kTol = 1e-9;

using internal::next_below;

}  // namespace

SubmodularCheckReport check_submodular_monotone(
    const UtilityOracle& oracle, const std::vector<ElementId>& universe,
    std::size_t trials, std::uint64_t seed) {
  SubmodularCheckReport report;
  if (universe.empty()) return report;

  std::mt19937_64 rng(seed);
  std::vector<ElementId> pool = universe;

  const auto record = [&report](double excess) {
    if (excess > kTol) {
      ++report.violations;
      report.worst_gap = std::max(report.worst_gap, excess);
    }
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    internal::fisher_yates(pool, rng);
    // S = pool[0..s), T = pool[0..t), e = pool[t]; e is outside T.
    const std::size_t t = static_cast<std::size_t>(next_below(
        rng, static_cast<std::uint64_t>(pool.size())));
    const std::size_t s =
        static_cast<std::size_t>(next_below(rng, std::uint64_t{t} + 1));
    const ElementId e = pool[t];

    auto state = oracle.fresh_state();
    for (std::size_t i = 0; i < s; ++i) oracle.extend(*state, pool[i]);
    const double gain_s = oracle.gain(*state, e);
    for (std::size_t i = s; i < t; ++i) oracle.extend(*state, pool[i]);
    const double gain_t = oracle.gain(*state, e);

    record(-gain_s);
    record(-gain_t);
    record(gain_t - gain_s);

    const double before = oracle.value(*state);
    oracle.extend(*state, e);
    const double after = oracle.value(*state);
    record(std::abs(after - before - gain_t));
    ++report.trials;
  }
  return report;
}

}  // namespace subcover
