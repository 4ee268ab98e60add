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

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "naive_oracles.hpp"
#include "subcover/sieve.hpp"
#include "test_instances.hpp"
#include "test_rng.hpp"

namespace {

using namespace subcover;
using subcover::testing::AdditiveOracle;
using subcover::testing::NaiveSetCover;

SieveConfig cfg(std::size_t m, double alpha, double q) {
  SieveConfig c;
  c.memory_slots = m;
  c.alpha = alpha;
  c.target_q = q;
  return c;
}

TEST_CASE("level layout for alpha 2: thresholds halve, capacities double") {
  AdditiveOracle oracle({1.0});
  Sieve sieve(cfg(8, 2.0, 1.0), oracle);
  REQUIRE(sieve.level_count() == 3);  // capacities 1+2+4 = 7 <= 8
  CHECK(sieve.level_threshold(0) == 1.0);
  CHECK(sieve.level_threshold(1) == 0.5);
  CHECK(sieve.level_threshold(2) == 0.25);
  CHECK(sieve.level_capacity(0) == 1);
  CHECK(sieve.level_capacity(1) == 2);
  CHECK(sieve.level_capacity(2) == 4);
  CHECK(sieve.footprint().capacity_sum == 7);
}

TEST_CASE("a budget of one slot still yields the threshold level") {
  AdditiveOracle oracle({1.0});
  Sieve sieve(cfg(1, 2.0, 5.0), oracle);
  REQUIRE(sieve.level_count() == 1);
  CHECK(sieve.level_threshold(0) == 5.0);
  CHECK(sieve.level_capacity(0) == 1);
}

TEST_CASE("fractional alpha rounds capacities up") {
  AdditiveOracle oracle({1.0});
  Sieve sieve(cfg(8, 1.5, 1.0), oracle);
  REQUIRE(sieve.level_count() == 3);  // 1 + 2 + 3 = 6; adding ceil(3.375) busts 8
  CHECK(sieve.level_capacity(0) == 1);
  CHECK(sieve.level_capacity(1) == 2);
  CHECK(sieve.level_capacity(2) == 3);
}

TEST_CASE("alpha 2 capacity sum is M-1 for power-of-two budgets") {
  AdditiveOracle oracle({1.0});
  for (std::size_t m : {2u, 4u, 8u, 16u, 64u, 1024u}) {
    Sieve sieve(cfg(m, 2.0, 1.0), oracle);
    CHECK(sieve.footprint().capacity_sum == m - 1);
  }
  // Non-power budgets can use every slot: M = 3 packs levels 1 + 2.
  Sieve tight(cfg(3, 2.0, 1.0), oracle);
  CHECK(tight.footprint().capacity_sum == 3);
}

TEST_CASE("config validation rejects out-of-range parameters") {
  AdditiveOracle oracle({1.0});
  CHECK_THROWS_WITH_AS(Sieve(cfg(0, 2.0, 1.0), oracle),
                       "memory budget must be at least 1 slot",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Sieve(cfg(4, 1.0, 1.0), oracle),
                       "alpha must lie in (1, 2]", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Sieve(cfg(4, 2.1, 1.0), oracle),
                       "alpha must lie in (1, 2]", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Sieve(cfg(4, 2.0, 0.0), oracle),
                       "target Q must be positive", std::invalid_argument);
}

TEST_CASE("ingest admits per level independently and skips full levels") {
  // Weights 3, 2, 1 against Q = 4: thresholds (4, 2, 1), capacities (1, 2, 4).
  AdditiveOracle oracle({3.0, 2.0, 1.0});
  Sieve sieve(cfg(8, 2.0, 4.0), oracle);
  const auto before = oracle.calls();

  sieve.ingest(0);  // level 1 and 2 admit
  CHECK(sieve.level_members(0).empty());
  CHECK(sieve.level_members(1) == std::vector<ElementId>{0});
  CHECK(sieve.level_members(2) == std::vector<ElementId>{0});

  sieve.ingest(1);  // fills level 1
  CHECK(sieve.level_members(1) == std::vector<ElementId>{0, 1});
  CHECK(sieve.level_utility(1) == 5.0);

  sieve.ingest(2);  // level 1 is full now: no oracle call spent there
  CHECK(sieve.level_members(1) == std::vector<ElementId>{0, 1});
  CHECK(sieve.level_members(2) == std::vector<ElementId>{0, 1, 2});
  CHECK(sieve.level_utility(2) == 6.0);

  // Element 0: 3 probes; element 1: 3 probes; element 2: 2 (level 1 skipped).
  CHECK((oracle.calls() - before).gain_calls == 8);
  CHECK(sieve.elements_seen() == 3);
}

TEST_CASE("re-arriving elements gain nothing and are not re-admitted") {
  AdditiveOracle oracle({3.0, 2.0, 1.0});
  Sieve sieve(cfg(8, 2.0, 4.0), oracle);
  sieve.ingest(0);
  sieve.ingest(0);
  CHECK(sieve.level_members(1) == std::vector<ElementId>{0});
  CHECK(sieve.level_members(2) == std::vector<ElementId>{0});
  CHECK(sieve.elements_seen() == 2);
}

TEST_CASE("query returns the smallest level meeting the slack target") {
  // Caches settle at (0, 0.6Q, 0.9Q).
  AdditiveOracle oracle({3.0, 6.0});
  Sieve sieve(cfg(8, 2.0, 10.0), oracle);
  sieve.ingest(1);  // w = 6: admitted at levels 1 and 2
  sieve.ingest(0);  // w = 3: admitted at level 2 only
  CHECK(sieve.level_utility(0) == 0.0);
  CHECK(sieve.level_utility(1) == 6.0);
  CHECK(sieve.level_utility(2) == 9.0);

  const QueryResult mid = sieve.query(0.5);
  REQUIRE(mid.found);
  CHECK(mid.level == 1);
  CHECK(mid.members == std::vector<ElementId>{1});
  CHECK(mid.utility == 6.0);

  const QueryResult tight = sieve.query(0.15);
  REQUIRE(tight.found);
  CHECK(tight.level == 2);
  CHECK(tight.members.size() == 2);

  const QueryResult too_tight = sieve.query(0.05);
  CHECK_FALSE(too_tight.found);
}

TEST_CASE("query tolerance accepts an exact boundary cache") {
  AdditiveOracle oracle({5.0});
  Sieve sieve(cfg(8, 2.0, 10.0), oracle);
  sieve.ingest(0);  // cached exactly (1 - 0.5)·Q at level 1
  const QueryResult r = sieve.query(0.5);
  REQUIRE(r.found);
  CHECK(r.utility == 5.0);
}

TEST_CASE("query validates its slack argument and spends no oracle calls") {
  AdditiveOracle oracle({3.0, 6.0});
  Sieve sieve(cfg(8, 2.0, 10.0), oracle);
  sieve.ingest(0);
  sieve.ingest(1);
  CHECK_THROWS_WITH_AS(sieve.query(0.0), "epsilon-tilde must lie in (0, 1)",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(sieve.query(1.0), "epsilon-tilde must lie in (0, 1)",
                       std::invalid_argument);
  const auto before = oracle.calls();
  for (double e : {0.9, 0.5, 0.25, 0.1, 0.05}) (void)sieve.query(e);
  CHECK(oracle.calls() == before);
}

TEST_CASE("a full level has cached utility at least Q") {
  for (int trial = 0; trial < 10; ++trial) {
    const CoverInstance inst = subcover::testing::random_planted_instance(
        900 + trial, 18, 14, 3);
    NaiveSetCover oracle(inst.sets.size(), inst.sets);
    const double q = 18.0;
    Sieve sieve(cfg(16, 2.0, q), oracle);
    for (ElementId e = 0; e < inst.sets.size(); ++e) sieve.ingest(e);
    for (std::size_t j = 0; j < sieve.level_count(); ++j) {
      if (sieve.level_members(j).size() == sieve.level_capacity(j)) {
        CHECK(sieve.level_utility(j) >= q - 1e-9);
      }
      CHECK(sieve.level_members(j).size() <= sieve.level_capacity(j));
    }
  }
}

TEST_CASE("cached level utilities always equal a recomputed value") {
  const CoverInstance inst =
      subcover::testing::random_planted_instance(31, 20, 18, 4);
  NaiveSetCover oracle(inst.sets.size(), inst.sets);
  Sieve sieve(cfg(12, 1.7, 20.0), oracle);
  for (ElementId e = 0; e < inst.sets.size(); ++e) sieve.ingest(e);
  for (std::size_t j = 0; j < sieve.level_count(); ++j) {
    auto state = oracle.fresh_state();
    for (ElementId e : sieve.level_members(j)) oracle.extend(*state, e);
    CHECK(sieve.level_utility(j) ==
          doctest::Approx(oracle.value(*state)).epsilon(1e-12));
  }
}

TEST_CASE("snapshot round-trips levels, members, and cached utilities") {
  AdditiveOracle oracle({3.0, 2.0, 1.0, 4.5});
  Sieve sieve(cfg(8, 2.0, 4.0), oracle);
  for (ElementId e = 0; e < 4; ++e) sieve.ingest(e);

  std::ostringstream out;
  sieve.save_snapshot(out);
  std::istringstream in(out.str());
  Sieve back = Sieve::load_snapshot(in, oracle, "mem");

  REQUIRE(back.level_count() == sieve.level_count());
  for (std::size_t j = 0; j < sieve.level_count(); ++j) {
    CHECK(back.level_threshold(j) == sieve.level_threshold(j));
    CHECK(back.level_capacity(j) == sieve.level_capacity(j));
    CHECK(back.level_members(j) == sieve.level_members(j));
    CHECK(back.level_utility(j) == sieve.level_utility(j));
  }
  CHECK(back.config().memory_slots == 8);
  CHECK(back.elements_seen() == 0);  // the stream itself is not persisted

  // The restored sieve keeps answering and ingesting.
  const QueryResult r = back.query(0.5);
  CHECK(r.found == sieve.query(0.5).found);
}

TEST_CASE("snapshot loader rejects mangled input") {
  AdditiveOracle oracle({3.0});
  Sieve sieve(cfg(4, 2.0, 2.0), oracle);
  sieve.ingest(0);
  std::ostringstream out;
  sieve.save_snapshot(out);
  const std::string good = out.str();

  {
    std::istringstream in("XYZ1 4 2 2 2\n");
    CHECK_THROWS_AS(Sieve::load_snapshot(in, oracle, "m"), std::runtime_error);
  }
  {
    std::string truncated = good.substr(0, good.find('\n') + 1);
    std::istringstream in(truncated);
    CHECK_THROWS_AS(Sieve::load_snapshot(in, oracle, "m"), std::runtime_error);
  }
  {
    std::istringstream in(good + "999\n");
    CHECK_THROWS_AS(Sieve::load_snapshot(in, oracle, "m"), std::runtime_error);
  }
}

TEST_CASE("stored elements never exceed the budget across alphas") {
  for (double alpha : {1.1, 1.5, 2.0}) {
    for (std::size_t m : {4u, 9u, 16u, 33u}) {
      const CoverInstance inst = subcover::testing::random_planted_instance(
          static_cast<std::uint64_t>(alpha * 100) + m, 20, 20, 4);
      NaiveSetCover oracle(inst.sets.size(), inst.sets);
      Sieve sieve(cfg(m, alpha, 20.0), oracle);
      for (ElementId e = 0; e < inst.sets.size(); ++e) sieve.ingest(e);
      const SieveFootprint fp = sieve.footprint();
      CHECK(fp.capacity_sum <= m);
      CHECK(fp.stored_elements <= fp.capacity_sum);
    }
  }
}

}  // namespace
