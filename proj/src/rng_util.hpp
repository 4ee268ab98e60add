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

#ifndef SUBCOVER_SRC_RNG_UTIL_HPP_
#define SUBCOVER_SRC_RNG_UTIL_HPP_

// Portable deterministic draws. mt19937_64's raw output is pinned by the
// standard; the distributions and std::shuffle are not, so seeded behavior
// that must reproduce across platforms goes through these helpers.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace subcover::internal {

// Unbiased draw in [0, bound) by rejection; bound >= 1.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(next_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace subcover::internal

#endif  // SUBCOVER_SRC_RNG_UTIL_HPP_
