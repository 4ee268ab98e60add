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

#ifndef SUBCOVER_ORACLE_HPP_
#define SUBCOVER_ORACLE_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>

#include "subcover/element.hpp"

namespace subcover {

/**
 * Opaque per-solution incremental state owned by one solution set S.
 * Concrete oracles attach whatever makes marginal gains cheap (covered-bit
 * vectors, Cholesky factors). States from different oracles are not
 * interchangeable.
 */
class SolutionState {
 public:
  virtual ~SolutionState() = default;

  /** Deep copy; the copy evolves independently of the original. */
  virtual std::unique_ptr<SolutionState> clone() const = 0;

  /** Approximate heap bytes held by this state, for footprint reports. */
  virtual std::size_t memory_bytes() const = 0;
};

/**
 * Contract for a normalized monotone submodular set function f with
 * incremental evaluation:
 *
 *   value(s)     f(S) for the solution S behind state s
 *   gain(s, e)   f(S ∪ {e}) − f(S), without changing s
 *   extend(s, e) commits e into s
 *
 * Guarantees every implementation must keep:
 *   value(fresh_state()) == 0, gain(s, e) >= 0, and
 *   gain(s, e) == value(extend(s, e)) − value(s) within 1e-9 absolute.
 *
 * Every public call increments exactly one tally in counter(); counts are the
 * portable cost metric, so implementations never call their own public
 * entry points internally.
 *
 * Concurrency: value/gain on distinct states may run concurrently; extend
 * requires exclusive access to its state. The counter tolerates concurrent
 * increments.
 */
class UtilityOracle {
 public:
  virtual ~UtilityOracle() = default;

  /** Number of valid element ids; ids are 0..ground_size()-1. */
  virtual std::size_t ground_size() const = 0;

  /** State representing the empty solution. Not counted as an oracle call. */
  std::unique_ptr<SolutionState> fresh_state() const {
    return make_fresh_state();
  }

  double value(const SolutionState& state) const {
    counter_.count_value();
    return value_impl(state);
  }

  double gain(const SolutionState& state, ElementId e) const {
    require_valid(e);
    counter_.count_gain();
    return gain_impl(state, e);
  }

  void extend(SolutionState& state, ElementId e) const {
    require_valid(e);
    counter_.count_extend();
    extend_impl(state, e);
  }

  CallCounterSnapshot calls() const { return counter_.snapshot(); }

 protected:
  virtual std::unique_ptr<SolutionState> make_fresh_state() const = 0;
  virtual double value_impl(const SolutionState& state) const = 0;
  virtual double gain_impl(const SolutionState& state, ElementId e) const = 0;
  virtual void extend_impl(SolutionState& state, ElementId e) const = 0;

  void require_valid(ElementId e) const {
    if (e >= ground_size()) throw std::out_of_range("element out of universe");
  }

  /** Downcast helper; rejects states that belong to another oracle. */
  template <typename StateT>
  static const StateT& state_as(const SolutionState& state) {
    const auto* typed = dynamic_cast<const StateT*>(&state);
    if (typed == nullptr) {
      throw std::invalid_argument("solution state does not match this oracle");
    }
    return *typed;
  }
  template <typename StateT>
  static StateT& state_as(SolutionState& state) {
    auto* typed = dynamic_cast<StateT*>(&state);
    if (typed == nullptr) {
      throw std::invalid_argument("solution state does not match this oracle");
    }
    return *typed;
  }

 private:
  mutable CallCounter counter_;
};

/** f(S ∪ {e}) − f(S); one gain call. */
inline double marginal_gain(const UtilityOracle& oracle,
                            const SolutionState& state, ElementId e) {
  return oracle.gain(state, e);
}

}  // namespace subcover

#endif  // SUBCOVER_ORACLE_HPP_
