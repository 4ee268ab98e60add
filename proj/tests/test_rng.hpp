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

#ifndef SUBCOVER_TESTS_TEST_RNG_HPP_
#define SUBCOVER_TESTS_TEST_RNG_HPP_

// Deterministic random helpers for tests. std::uniform_int_distribution and
// std::shuffle are implementation defined, so tests that freeze expected
// values draw through these instead.

#include <cstdint>
#include <random>
#include <vector>

namespace subcover::testing {

inline std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

// Unbiased draw in [0, bound) by rejection.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double next_double(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * next_unit(rng);
}

// Fisher-Yates with the bounded draw above; stable across platforms.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(next_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace subcover::testing

#endif  // SUBCOVER_TESTS_TEST_RNG_HPP_
