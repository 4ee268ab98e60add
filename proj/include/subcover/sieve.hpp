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

#ifndef SUBCOVER_SIEVE_HPP_
#define SUBCOVER_SIEVE_HPP_

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "subcover/element.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

struct SieveConfig {
  std::size_t memory_slots = 0;  // M, stored-element budget, >= 1
  double alpha = 2.0;            // level base, in (1, 2]
  double target_q = 0.0;         // cover target Q, > 0

  /** Throws std::invalid_argument if any field is out of range. */
  void validate() const;
};

struct SieveFootprint {
  std::size_t stored_elements = 0;  // Σ level sizes
  std::size_t capacity_sum = 0;     // Σ ⌈α^j⌉, always <= M
  std::size_t levels = 0;           // L
  std::size_t state_bytes = 0;      // per-level oracle-state heap estimate
};

/** found == false means the query answered AssumptionViolated. */
struct QueryResult {
  bool found = false;
  std::size_t level = 0;
  std::vector<ElementId> members;
  double utility = 0.0;
};

/**
 * One-pass threshold sieve for submodular cover. L parallel levels are kept,
 * where L is the largest count with Σ_{j<L} ⌈α^j⌉ <= memory_slots; level j
 * admits an arriving element when the level is below its capacity ⌈α^j⌉ and
 * the marginal gain against the level's own solution is at least Q/α^j.
 * Levels never exchange information, and a full level is skipped without
 * spending an oracle call.
 *
 * After (or during) the pass, query(ε̃) scans levels from 0 upward and
 * returns the first whose cached utility reaches (1-ε̃)Q - 1e-9, or an
 * AssumptionViolated outcome. Queries are answered from cached utilities and
 * never call the oracle, so any number of them is free.
 *
 * The oracle must outlive the sieve.
 */
class Sieve {
 public:
  Sieve(const SieveConfig& config, const UtilityOracle& oracle);

  /** Feeds the next stream element; call exactly once per arrival. */
  void ingest(ElementId e);

  /** Answers from cache; ε̃ must lie in (0, 1). Zero oracle calls. */
  QueryResult query(double epsilon_tilde) const;

  SieveFootprint footprint() const;

  const SieveConfig& config() const { return config_; }
  std::size_t level_count() const { return levels_.size(); }
  std::size_t elements_seen() const { return elements_seen_; }
  double level_threshold(std::size_t j) const { return levels_[j].threshold; }
  std::size_t level_capacity(std::size_t j) const {
    return levels_[j].capacity;
  }
  const std::vector<ElementId>& level_members(std::size_t j) const {
    return levels_[j].members;
  }
  double level_utility(std::size_t j) const {
    return levels_[j].cached_utility;
  }

  /**
   * Text snapshot: header `ESC1 M alpha Q L`, then per level a line
   * `j threshold capacity size` followed, when size > 0, by one line of
   * member ids. Cached utilities are not stored; load_snapshot re-derives
   * them by replaying the members through the oracle.
   */
  void save_snapshot(std::ostream& out) const;

  /**
   * Rebuilds a sieve from a snapshot. Spends extend/value calls to replay
   * members; elements_seen restarts at 0 (the stream itself is not stored).
   */
  static Sieve load_snapshot(std::istream& in, const UtilityOracle& oracle,
                             const std::string& source_name = "<snapshot>");

 private:
  struct Level {
    double threshold = 0.0;
    std::size_t capacity = 0;
    std::vector<ElementId> members;
    std::unique_ptr<SolutionState> state;
    double cached_utility = 0.0;
  };

  SieveConfig config_;
  const UtilityOracle* oracle_;
  std::vector<Level> levels_;
  std::size_t elements_seen_ = 0;
};

}  // namespace subcover

#endif  // SUBCOVER_SIEVE_HPP_
