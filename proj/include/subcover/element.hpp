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

#ifndef SUBCOVER_ELEMENT_HPP_
#define SUBCOVER_ELEMENT_HPP_

#include <atomic>
#include <cstdint>

namespace subcover {

// Identity of a ground element. Ids are dense and unique per instance; the
// same id arriving twice in a stream denotes the same element.
using ElementId = std::uint32_t;

// Plain copyable snapshot of a CallCounter at one instant.
struct CallCounterSnapshot {
  std::uint64_t gain_calls = 0;
  std::uint64_t value_calls = 0;
  std::uint64_t extend_calls = 0;

  friend CallCounterSnapshot operator-(const CallCounterSnapshot& a,
                                       const CallCounterSnapshot& b) {
    return {a.gain_calls - b.gain_calls, a.value_calls - b.value_calls,
            a.extend_calls - b.extend_calls};
  }
  friend bool operator==(const CallCounterSnapshot&,
                         const CallCounterSnapshot&) = default;
};

/**
 * Monotone oracle-call tallies. Counts only ever increase; there is no reset,
 * callers that need per-phase numbers take snapshots and subtract. Increments
 * are atomic so concurrent gain queries on distinct states may share one
 * counter.
 */
class CallCounter {
 public:
  void count_gain() { gain_.fetch_add(1, std::memory_order_relaxed); }
  void count_value() { value_.fetch_add(1, std::memory_order_relaxed); }
  void count_extend() { extend_.fetch_add(1, std::memory_order_relaxed); }

  CallCounterSnapshot snapshot() const {
    return {gain_.load(std::memory_order_relaxed),
            value_.load(std::memory_order_relaxed),
            extend_.load(std::memory_order_relaxed)};
  }

 private:
  std::atomic<std::uint64_t> gain_{0};
  std::atomic<std::uint64_t> value_{0};
  std::atomic<std::uint64_t> extend_{0};
};

}  // namespace subcover

#endif  // SUBCOVER_ELEMENT_HPP_
