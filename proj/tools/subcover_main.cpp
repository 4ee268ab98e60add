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

// Command line driver. Subcommands:
//
//   stream    one-pass threshold sieve, then a query sweep over ε̃
//   greedy    offline greedy with per-ε̃ milestones read off one run
//   lazy      same picks as greedy, lazy evaluation
//   random    random-order baseline
//   gen-hard  adversarial layered-tree cover instance generator
//   check     randomized monotonicity / submodularity / consistency audit
//   summary   merge run CSVs and recompute the vs-greedy ratio columns
//
// Exit codes: 0 on success, 2 when a run produced rows but every query or
// milestone came back not-found, 1 on any error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subcover/bitset.hpp"
#include "subcover/cover_instance.hpp"
#include "subcover/coverage.hpp"
#include "subcover/graph.hpp"
#include "subcover/greedy.hpp"
#include "subcover/hard_instance.hpp"
#include "subcover/harness.hpp"
#include "subcover/logdet.hpp"
#include "subcover/oracle.hpp"
#include "subcover/sieve.hpp"
#include "subcover/submodular_check.hpp"
#include "subcover/textio.hpp"

namespace {

using subcover::ElementId;

// Uniform draw below bound from raw mt19937_64 output. Rejection sampling
// keeps results identical across standard libraries.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

template <typename T>
void shuffle_ids(std::vector<T>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[next_below(rng, i)]);
  }
}

struct ProblemOpts {
  std::string utility;
  std::string input;
  std::string format;  // empty = inferred from the utility
  double sigma = 1.0;
  double bandwidth = 0.0;  // 0 = median pairwise distance
  double q_abs = 0.0;
  double q_frac = 0.0;
  double f_total = 0.0;
  bool has_q_abs = false;
  bool has_q_frac = false;
  bool has_f_total = false;
};

struct Problem {
  std::unique_ptr<subcover::UtilityOracle> oracle;
  std::vector<ElementId> ids;  // 0..ground-1 in natural order
  double full_value = 0.0;     // f(ground); meaningless when !full_known
  bool full_known = false;
  const subcover::LogDetOracle* logdet = nullptr;
};

void add_problem_flags(CLI::App* cmd, ProblemOpts& o) {
  cmd->add_option("--utility", o.utility, "domset | vcover | setcover | logdet")
      ->required()
      ->check(CLI::IsMember({"domset", "vcover", "setcover", "logdet"}));
  cmd->add_option("--input", o.input, "instance file")->required();
  cmd->add_option("--format", o.format,
                  "edges | adj (graphs), sets (setcover), points (logdet); "
                  "default picked by the utility")
      ->check(CLI::IsMember({"edges", "adj", "sets", "points"}));
  cmd->add_option("--sigma", o.sigma, "logdet regularization (default 1)");
  cmd->add_option("--bandwidth", o.bandwidth,
                  "logdet kernel width; default = median pairwise distance");
}

void add_q_flags(CLI::App* cmd, ProblemOpts& o) {
  auto* qa = cmd->add_option("--Q", o.q_abs, "absolute coverage target");
  auto* qf = cmd->add_option(
      "--q-frac", o.q_frac,
      "target as a fraction of f(ground); logdet needs --f-total");
  qa->excludes(qf);
  qf->excludes(qa);
  cmd->add_option("--f-total", o.f_total,
                  "externally known f(ground), used only with --q-frac");
  cmd->callback([&o, cmd] {
    o.has_q_abs = cmd->count("--Q") > 0;
    o.has_q_frac = cmd->count("--q-frac") > 0;
    o.has_f_total = cmd->count("--f-total") > 0;
  });
}

std::string effective_format(const ProblemOpts& o) {
  if (!o.format.empty()) return o.format;
  if (o.utility == "setcover") return "sets";
  if (o.utility == "logdet") return "points";
  return "edges";
}

Problem build_problem(const ProblemOpts& o) {
  Problem p;
  const std::string format = effective_format(o);
  if (o.utility == "domset" || o.utility == "vcover") {
    if (format != "edges" && format != "adj") {
      throw std::invalid_argument("graph utilities take --format edges|adj");
    }
    subcover::Graph g = subcover::load_graph(o.input, format == "adj");
    const std::size_t n = g.n;
    const std::size_t edges = g.edge_count();
    if (o.utility == "domset") {
      p.oracle = std::make_unique<subcover::DominatingSetOracle>(std::move(g));
      p.full_value = static_cast<double>(n);
    } else {
      p.oracle = std::make_unique<subcover::VertexCoverOracle>(std::move(g));
      p.full_value = static_cast<double>(edges);
    }
    p.full_known = true;
  } else if (o.utility == "setcover") {
    if (format != "sets") {
      throw std::invalid_argument("setcover takes --format sets");
    }
    subcover::CoverInstance inst = subcover::load_cover_instance(o.input);
    subcover::DynamicBitset covered(inst.universe_size);
    for (const auto& s : inst.sets) {
      for (ElementId e : s) covered.set(e);
    }
    p.full_value = static_cast<double>(covered.count());
    p.full_known = true;
    p.oracle = std::make_unique<subcover::SetCoverOracle>(std::move(inst));
  } else {  // logdet
    if (format != "points") {
      throw std::invalid_argument("logdet takes --format points");
    }
    subcover::KernelConfig cfg;
    cfg.sigma = o.sigma;
    cfg.points = subcover::load_points_csv(o.input);
    cfg.bandwidth = o.bandwidth > 0.0
                        ? o.bandwidth
                        : subcover::median_pairwise_distance(cfg.points);
    std::cerr << "logdet: sigma=" << subcover::format_double(cfg.sigma)
              << " bandwidth=" << subcover::format_double(cfg.bandwidth)
              << "\n";
    auto oracle = std::make_unique<subcover::LogDetOracle>(std::move(cfg));
    p.logdet = oracle.get();
    p.oracle = std::move(oracle);
    p.full_known = false;  // f(ground) is what the oracle exists to avoid
  }
  p.ids.resize(p.oracle->ground_size());
  std::iota(p.ids.begin(), p.ids.end(), ElementId{0});
  return p;
}

double resolve_q(const ProblemOpts& o, const Problem& p) {
  if (o.has_q_abs == o.has_q_frac) {
    throw std::invalid_argument("give exactly one of --Q and --q-frac");
  }
  if (o.has_q_abs) return o.q_abs;
  if (o.q_frac <= 0.0 || o.q_frac > 1.0) {
    throw std::invalid_argument("--q-frac must lie in (0, 1]");
  }
  if (p.full_known) return o.q_frac * p.full_value;
  if (!o.has_f_total) {
    throw std::invalid_argument(
        "logdet cannot derive f(ground) cheaply; give --f-total or --Q");
  }
  return o.q_frac * o.f_total;
}

// Writes to the file when set, to stdout otherwise.
void emit_csv(const std::string& out_path,
              const std::vector<subcover::ReportRow>& rows) {
  if (out_path.empty()) {
    subcover::write_summary_csv(std::cout, rows);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  subcover::write_summary_csv(out, rows);
}

int finish_run(const std::string& out_path,
               const std::vector<subcover::ReportRow>& rows) {
  emit_csv(out_path, rows);
  bool any_found = rows.empty();
  for (const auto& r : rows) any_found = any_found || r.found;
  return any_found ? 0 : 2;
}

int cmd_stream(const ProblemOpts& po, const std::vector<double>& eps,
               std::size_t memory, double alpha, std::uint64_t seed,
               bool has_seed, const std::string& out_path,
               const std::string& save_state, const std::string& load_state) {
  Problem p = build_problem(po);
  const double q = resolve_q(po, p);
  subcover::SieveConfig cfg;
  cfg.memory_slots = memory;
  cfg.alpha = alpha;
  cfg.target_q = q;

  std::vector<subcover::ReportRow> rows;
  const subcover::Sieve* sieve = nullptr;
  std::unique_ptr<subcover::Sieve> restored;
  subcover::StreamResult result;

  if (!load_state.empty()) {
    std::ifstream in(load_state);
    if (!in) throw std::runtime_error("cannot open snapshot: " + load_state);
    restored = std::make_unique<subcover::Sieve>(
        subcover::Sieve::load_snapshot(in, *p.oracle, load_state));
    sieve = restored.get();
    for (double e : subcover::normalize_eps_list(eps)) {
      subcover::QueryResult qr = restored->query(e);
      subcover::ReportRow row;
      row.utility = po.utility;
      row.algorithm = "stream";
      row.alpha = restored->config().alpha;
      row.memory = restored->config().memory_slots;
      row.q = restored->config().target_q;
      row.eps_tilde = e;
      row.found = qr.found;
      row.size = qr.found ? qr.members.size() : 0;
      row.f_achieved = qr.found ? qr.utility : 0.0;
      row.calls = 0;  // replaying a snapshot is not the original pass
      row.stored = restored->footprint().stored_elements;
      rows.push_back(row);
    }
  } else {
    std::vector<ElementId> order = p.ids;
    if (has_seed) shuffle_ids(order, seed);
    result = subcover::run_stream(*p.oracle, order, cfg, eps, po.utility);
    rows = result.report.rows;
    sieve = result.sieve.get();
  }

  if (!save_state.empty()) {
    std::ofstream out(save_state);
    if (!out) throw std::runtime_error("cannot open for writing: " + save_state);
    sieve->save_snapshot(out);
  }

  const subcover::SieveFootprint fp = sieve->footprint();
  std::cerr << "stream: levels=" << fp.levels
            << " capacity_sum=" << fp.capacity_sum
            << " stored=" << fp.stored_elements
            << " state_bytes~=" << fp.state_bytes
            << " elements_seen=" << sieve->elements_seen() << "\n"
            << "note: the memory budget counts stored element slots; byte "
               "cost per slot depends on the oracle state\n";
  return finish_run(out_path, rows);
}

int cmd_baseline(const ProblemOpts& po, const std::vector<double>& eps,
                 subcover::BaselineKind kind, std::uint64_t seed,
                 const std::string& out_path, const std::string& trace_path) {
  Problem p = build_problem(po);
  const double q = resolve_q(po, p);
  subcover::GreedyTrace trace;
  subcover::RunReport report = subcover::run_baseline(
      *p.oracle, p.ids, q, eps, kind, seed, po.utility, &trace);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + trace_path);
    subcover::write_trace_csv(out, trace);
  }
  return finish_run(out_path, report.rows);
}

int cmd_gen_hard(std::uint32_t arity, std::uint32_t layers,
                 std::uint32_t leaf_block, int case_bit, std::uint64_t seed,
                 bool has_shuffle, std::uint64_t shuffle_seed,
                 const std::string& out_path) {
  subcover::TreeSpec spec;
  spec.arity = arity;
  spec.layers = layers;
  spec.leaf_block = leaf_block;
  spec.validate();

  subcover::PointerInput pi = subcover::random_pointer_input(spec, seed);
  const std::vector<std::uint64_t> path = subcover::induced_path(spec, pi);
  const std::uint64_t leaf_pos = path.back();
  pi.leaf_bits[leaf_pos] = static_cast<std::uint8_t>(case_bit);

  subcover::HardInstance hi = subcover::build_instance(spec, pi);
  if (has_shuffle) {
    std::vector<std::size_t> perm(hi.instance.sets.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    shuffle_ids(perm, shuffle_seed);
    subcover::CoverInstance shuffled;
    shuffled.universe_size = hi.instance.universe_size;
    for (std::size_t i : perm) {
      shuffled.sets.push_back(std::move(hi.instance.sets[i]));
      shuffled.labels.push_back(std::move(hi.instance.labels[i]));
    }
    hi.instance = std::move(shuffled);
  }

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  subcover::write_cover_instance(out, hi.instance);

  std::ofstream meta(out_path + ".meta");
  if (!meta) {
    throw std::runtime_error("cannot open for writing: " + out_path + ".meta");
  }
  meta << spec.arity << ' ' << spec.layers << ' ' << spec.leaf_block << ' '
       << case_bit << ' ' << leaf_pos << ' ' << subcover::format_double(hi.q)
       << "\n";

  std::cerr << "gen-hard: sets=" << hi.instance.sets.size()
            << " universe=" << hi.instance.universe_size
            << " q=" << subcover::format_double(hi.q) << " case=" << case_bit
            << " path_leaf=" << leaf_pos << "\n";
  return 0;
}

int cmd_check(const ProblemOpts& po, std::size_t trials, std::uint64_t seed) {
  Problem p = build_problem(po);
  subcover::SubmodularCheckReport rep =
      subcover::check_submodular_monotone(*p.oracle, p.ids, trials, seed);
  std::cout << "trials=" << rep.trials << " violations=" << rep.violations
            << " worst_gap=" << subcover::format_double(rep.worst_gap) << "\n";

  bool reference_ok = true;
  if (p.logdet != nullptr && !p.ids.empty()) {
    // Cross-check the incremental factorization against a from-scratch
    // dense one on a random chain.
    std::vector<ElementId> order = p.ids;
    shuffle_ids(order, seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t take = std::min<std::size_t>(order.size(), 50);
    order.resize(take);
    auto state = p.oracle->fresh_state();
    for (ElementId e : order) p.oracle->extend(*state, e);
    const double fast = p.oracle->value(*state);
    const double slow = subcover::logdet_reference(p.logdet->config(), order);
    const double scale = std::max(1.0, std::abs(slow));
    const double rel = std::abs(fast - slow) / scale;
    reference_ok = rel <= 1e-8;
    std::cout << "reference_chain=" << take
              << " rel_err=" << subcover::format_double(rel) << "\n";
  }
  return (rep.violations == 0 && reference_ok) ? 0 : 1;
}

int cmd_summary(const std::vector<std::string>& inputs,
                const std::string& out_path) {
  std::vector<subcover::ReportRow> rows;
  for (const std::string& path : inputs) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<subcover::ReportRow> part =
        subcover::read_summary_csv(in, path);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  emit_csv(out_path, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"memory-bounded streaming submodular cover toolkit"};
  app.require_subcommand(1);

  ProblemOpts po;
  std::vector<double> eps{0.5};
  std::size_t memory = 64;
  double alpha = 2.0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string trace_path;
  std::string save_state;
  std::string load_state;

  auto add_eps = [&eps](CLI::App* cmd) {
    cmd->add_option("--eps-tilde", eps,
                    "slack values in (0,1), comma separated (default 0.5)")
        ->delimiter(',');
  };
  auto add_out = [&out_path](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the CSV here (default stdout)");
  };

  CLI::App* stream = app.add_subcommand(
      "stream", "one pass of the threshold sieve plus a query sweep");
  add_problem_flags(stream, po);
  add_q_flags(stream, po);
  add_eps(stream);
  add_out(stream);
  stream->add_option("--memory", memory, "stored-element budget M")
      ->required();
  stream->add_option("--alpha", alpha, "level growth factor in (1,2]");
  stream->add_option("--seed", seed,
                     "when given, ingest in a seeded random order instead of "
                     "file order");
  stream->add_option("--save-state", save_state,
                     "write a sieve snapshot after the pass");
  stream->add_option("--load-state", load_state,
                     "skip the pass and answer queries from a snapshot");

  CLI::App* greedy =
      app.add_subcommand("greedy", "offline greedy to the tightest ε̃ target");
  CLI::App* lazy =
      app.add_subcommand("lazy", "lazy greedy; same picks, fewer oracle calls");
  CLI::App* random =
      app.add_subcommand("random", "random-order insertion baseline");
  for (CLI::App* cmd : {greedy, lazy, random}) {
    add_problem_flags(cmd, po);
    add_q_flags(cmd, po);
    add_eps(cmd);
    add_out(cmd);
    cmd->add_option("--trace", trace_path, "write the pick trace CSV here");
  }
  random->add_option("--seed", seed, "permutation seed (default 0)");

  std::uint32_t arity = 2;
  std::uint32_t layers = 2;
  std::uint32_t leaf_block = 2;
  int case_bit = 1;
  std::uint64_t shuffle_seed = 0;
  CLI::App* gen = app.add_subcommand(
      "gen-hard", "emit a layered-tree cover instance and its .meta sidecar");
  gen->add_option("--arity", arity, "children per internal vertex (t >= 2)");
  gen->add_option("--layers", layers, "tree depth (k >= 2)");
  gen->add_option("--leaf-block", leaf_block, "leaf block size (>= arity)");
  gen->add_option("--case", case_bit,
                  "bit planted at the induced path's leaf: 1 = a k-set cover "
                  "exists, 0 = every cover is large")
      ->check(CLI::Range(0, 1));
  gen->add_option("--seed", seed, "pointer/bit seed");
  auto* shuf = gen->add_option("--shuffle-seed", shuffle_seed,
                               "also shuffle the set order with this seed");
  gen->add_option("--out", out_path, "instance file to write")->required();

  std::size_t trials = 500;
  CLI::App* check = app.add_subcommand(
      "check", "randomized oracle audit: monotone, submodular, consistent");
  add_problem_flags(check, po);
  check->add_option("--trials", trials, "sample count (default 500)");
  check->add_option("--seed", seed, "sample seed");

  std::vector<std::string> summary_inputs;
  CLI::App* summary = app.add_subcommand(
      "summary", "merge run CSVs; vs-greedy ratios are recomputed");
  summary->add_option("inputs", summary_inputs, "CSV files to merge")
      ->required()
      ->expected(-1);
  add_out(summary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (stream->parsed()) {
      return cmd_stream(po, eps, memory, alpha, seed, stream->count("--seed") > 0,
                        out_path, save_state, load_state);
    }
    if (greedy->parsed()) {
      return cmd_baseline(po, eps, subcover::BaselineKind::kGreedy, seed,
                          out_path, trace_path);
    }
    if (lazy->parsed()) {
      return cmd_baseline(po, eps, subcover::BaselineKind::kLazy, seed,
                          out_path, trace_path);
    }
    if (random->parsed()) {
      return cmd_baseline(po, eps, subcover::BaselineKind::kRandom, seed,
                          out_path, trace_path);
    }
    if (gen->parsed()) {
      return cmd_gen_hard(arity, layers, leaf_block, case_bit, seed,
                          shuf->count() > 0, shuffle_seed, out_path);
    }
    if (check->parsed()) return cmd_check(po, trials, seed);
    if (summary->parsed()) return cmd_summary(summary_inputs, out_path);
  } catch (const std::exception& e) {
    std::cerr << "subcover: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
