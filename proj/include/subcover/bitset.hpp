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

#ifndef SUBCOVER_BITSET_HPP_
#define SUBCOVER_BITSET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "subcover/kernels.hpp"

namespace subcover {

/** Fixed-size bit vector for coverage states. Bounds are the caller's job. */
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t n)
      : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  /** Population count over the whole vector. */
  std::size_t count() const {
    return static_cast<std::size_t>(kernels::popcount_words(words_));
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t memory_bytes() const {
    return words_.capacity() * sizeof(std::uint64_t);
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace subcover

#endif  // SUBCOVER_BITSET_HPP_
