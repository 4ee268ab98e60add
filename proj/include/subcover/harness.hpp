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

#ifndef SUBCOVER_HARNESS_HPP_
#define SUBCOVER_HARNESS_HPP_

// Experiment orchestration shared by the command-line tool and the
// acceptance suite: one streaming pass answering a whole ε̃ sweep, offline
// baselines with per-ε̃ milestones from a single run, and the summary CSV.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "subcover/element.hpp"
#include "subcover/greedy.hpp"
#include "subcover/oracle.hpp"
#include "subcover/sieve.hpp"

namespace subcover {

/**
 * One CSV row. For a query answered AssumptionViolated, found is false and
 * size/f_achieved are written as 0 (a Found row always has utility > 0, so
 * the encoding is unambiguous). Offline algorithms carry alpha = 0 and
 * memory = 0; their stored column is the ground-set size, since they need
 * random access to every element.
 */
struct ReportRow {
  std::string utility;
  std::string algorithm;
  double alpha = 0.0;
  std::size_t memory = 0;
  double q = 0.0;
  double eps_tilde = 0.0;
  bool found = true;
  std::size_t size = 0;
  double f_achieved = 0.0;
  std::uint64_t calls = 0;  // gain calls consumed by the producing run
  std::size_t stored = 0;
  double ms = 0.0;  // wall time of the producing run; never part of gating
};

struct RunReport {
  std::vector<ReportRow> rows;
};

/** Validates every value is in (0, 1), sorts descending, drops duplicates. */
std::vector<double> normalize_eps_list(std::vector<double> eps_tilde);

struct StreamResult {
  RunReport report;
  std::unique_ptr<Sieve> sieve;        // live state, e.g. for snapshots
  CallCounterSnapshot ingest_calls;    // oracle calls spent by the pass
  CallCounterSnapshot query_delta;     // oracle calls spent by the sweep
};

/**
 * Ingests the stream once, then answers every ε̃ from the cached state. One
 * row per ε̃, in descending ε̃ order; the calls column repeats the pass
 * total, since the queries themselves consume no oracle calls.
 */
StreamResult run_stream(const UtilityOracle& oracle,
                        const std::vector<ElementId>& stream,
                        const SieveConfig& config,
                        std::vector<double> eps_tilde,
                        const std::string& utility_label);

enum class BaselineKind { kGreedy, kLazy, kRandom };

/**
 * Runs the baseline once against the tightest target (1 - min ε̃)·Q and
 * reads the per-ε̃ milestones off the trace prefix (greedy solutions are
 * nested, so every milestone is a prefix of the one run). A milestone the
 * run never reached yields a found = false row.
 */
RunReport run_baseline(const UtilityOracle& oracle,
                       const std::vector<ElementId>& ground, double q,
                       std::vector<double> eps_tilde, BaselineKind kind,
                       std::uint64_t seed, const std::string& utility_label,
                       GreedyTrace* trace_out = nullptr);

/**
 * Writes `utility,algorithm,alpha,M,Q,eps_tilde,size,f_achieved,calls,
 * stored,ms`. When any row's algorithm is "greedy", two ratio columns
 * (size_vs_greedy, calls_vs_greedy) are appended, matched on
 * (utility, Q, eps_tilde); rows without a matching greedy row get nan.
 */
void write_summary_csv(std::ostream& out, const std::vector<ReportRow>& rows);

/** Reads rows written by write_summary_csv (ratio columns are ignored). */
std::vector<ReportRow> read_summary_csv(std::istream& in,
                                        const std::string& source_name);

}  // namespace subcover

#endif  // SUBCOVER_HARNESS_HPP_
