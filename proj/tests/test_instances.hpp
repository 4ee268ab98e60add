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

#ifndef SUBCOVER_TESTS_TEST_INSTANCES_HPP_
#define SUBCOVER_TESTS_TEST_INSTANCES_HPP_

// Seeded instance and point-cloud generators shared by the unit and
// acceptance suites. A planted partition keeps the optimum cover small, so
// exhaustive search stays cheap.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "subcover/cover_instance.hpp"
#include "subcover/element.hpp"
#include "subcover/logdet.hpp"
#include "test_rng.hpp"

namespace subcover::testing {

/**
 * Random coverage instance whose universe 0..n-1 is covered by a planted
 * partition into `plant` sets, so the optimum cover for Q = n has size at
 * most `plant`. The remaining m - plant sets are random nonempty subsets,
 * and the set order is shuffled.
 */
inline CoverInstance random_planted_instance(std::uint64_t seed,
                                             std::uint32_t n, std::uint32_t m,
                                             std::uint32_t plant) {
  std::mt19937_64 rng(seed);
  CoverInstance inst;
  inst.universe_size = n;

  std::vector<ElementId> ids(n);
  for (std::uint32_t i = 0; i < n; ++i) ids[i] = i;
  shuffle(ids, rng);

  // Planted partition: contiguous chunks of the shuffled universe.
  for (std::uint32_t p = 0; p < plant; ++p) {
    const std::size_t lo = static_cast<std::size_t>(p) * n / plant;
    const std::size_t hi = static_cast<std::size_t>(p + 1) * n / plant;
    if (lo == hi) continue;  // plant > n leaves some chunks empty
    inst.sets.emplace_back(ids.begin() + lo, ids.begin() + hi);
  }

  while (inst.sets.size() < m) {
    const std::size_t size = 1 + next_below(rng, std::max<std::uint32_t>(n / 3, 1));
    std::vector<ElementId> s;
    for (std::size_t i = 0; i < size; ++i) {
      s.push_back(static_cast<ElementId>(next_below(rng, n)));
    }
    inst.sets.push_back(std::move(s));
  }

  std::vector<std::size_t> order(inst.sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle(order, rng);
  CoverInstance out;
  out.universe_size = n;
  for (std::size_t i : order) out.sets.push_back(std::move(inst.sets[i]));
  return out;
}

/** Standard-normal point cloud via Box-Muller over raw engine draws. */
inline PointSet random_gaussian_points(std::uint64_t seed, std::size_t count,
                                       std::size_t dimension) {
  std::mt19937_64 rng(seed);
  PointSet points(dimension, {});
  std::vector<double> row(dimension);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t d = 0; d < dimension; ++d) {
      const double u = std::max(next_unit(rng), 1e-300);
      const double v = next_unit(rng);
      row[d] = std::sqrt(-2.0 * std::log(u)) *
               std::cos(2.0 * std::numbers::pi * v);
    }
    points.append(row);
  }
  return points;
}

}  // namespace subcover::testing

#endif  // SUBCOVER_TESTS_TEST_INSTANCES_HPP_
