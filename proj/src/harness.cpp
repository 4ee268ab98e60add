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

#include "subcover/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "subcover/textio.hpp"

namespace subcover {
namespace {

constexpr double kTol = 1e-9;

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::vector<double> normalize_eps_list(std::vector<double> eps_tilde) {
  if (eps_tilde.empty()) {
    throw std::invalid_argument("need at least one epsilon-tilde value");
  }
  for (const double e : eps_tilde) {
    if (!(e > 0.0) || !(e < 1.0)) {
      throw std::invalid_argument("epsilon-tilde must lie in (0, 1)");
    }
  }
  std::sort(eps_tilde.begin(), eps_tilde.end(), std::greater<double>());
  eps_tilde.erase(std::unique(eps_tilde.begin(), eps_tilde.end()),
                  eps_tilde.end());
  return eps_tilde;
}

StreamResult run_stream(const UtilityOracle& oracle,
                        const std::vector<ElementId>& stream,
                        const SieveConfig& config,
                        std::vector<double> eps_tilde,
                        const std::string& utility_label) {
  const std::vector<double> eps = normalize_eps_list(std::move(eps_tilde));

  StreamResult result;
  const CallCounterSnapshot before = oracle.calls();
  const auto t0 = std::chrono::steady_clock::now();
  result.sieve = std::make_unique<Sieve>(config, oracle);
  for (const ElementId e : stream) result.sieve->ingest(e);
  const double pass_ms = elapsed_ms(t0);
  result.ingest_calls = oracle.calls() - before;

  const SieveFootprint fp = result.sieve->footprint();
  const CallCounterSnapshot sweep_before = oracle.calls();
  for (const double e : eps) {
    const QueryResult q = result.sieve->query(e);
    ReportRow row;
    row.utility = utility_label;
    row.algorithm = "stream";
    row.alpha = config.alpha;
    row.memory = config.memory_slots;
    row.q = config.target_q;
    row.eps_tilde = e;
    row.found = q.found;
    row.size = q.found ? q.members.size() : 0;
    row.f_achieved = q.found ? q.utility : 0.0;
    row.calls = result.ingest_calls.gain_calls;
    row.stored = fp.stored_elements;
    row.ms = pass_ms;
    result.report.rows.push_back(std::move(row));
  }
  result.query_delta = oracle.calls() - sweep_before;
  return result;
}

RunReport run_baseline(const UtilityOracle& oracle,
                       const std::vector<ElementId>& ground, double q,
                       std::vector<double> eps_tilde, BaselineKind kind,
                       std::uint64_t seed, const std::string& utility_label,
                       GreedyTrace* trace_out) {
  const std::vector<double> eps = normalize_eps_list(std::move(eps_tilde));
  // Smallest ε̃ is last after the descending sort; its target is the
  // tightest, and greedy milestones for the looser ones are prefixes.
  const double eps_min = eps.back();

  const auto t0 = std::chrono::steady_clock::now();
  GreedyTrace trace;
  std::string name;
  switch (kind) {
    case BaselineKind::kGreedy:
      trace = greedy_cover(oracle, ground, q, eps_min);
      name = "greedy";
      break;
    case BaselineKind::kLazy:
      trace = lazy_greedy_cover(oracle, ground, q, eps_min);
      name = "lazy";
      break;
    case BaselineKind::kRandom:
      trace = random_baseline(oracle, ground, (1.0 - eps_min) * q, seed);
      name = "random";
      break;
  }
  const double run_ms = elapsed_ms(t0);

  RunReport report;
  for (const double e : eps) {
    const double target = (1.0 - e) * q - kTol;
    ReportRow row;
    row.utility = utility_label;
    row.algorithm = name;
    row.q = q;
    row.eps_tilde = e;
    row.stored = ground.size();
    row.ms = run_ms;
    row.found = false;
    if (target <= 0.0) {
      row.found = true;  // the empty prefix already meets the target
      row.size = 0;
      row.f_achieved = 0.0;
      row.calls = 0;
    } else {
      for (std::size_t i = 0; i < trace.picks.size(); ++i) {
        if (trace.utilities[i] >= target) {
          row.found = true;
          row.size = i + 1;
          row.f_achieved = trace.utilities[i];
          row.calls = trace.calls_at[i];
          break;
        }
      }
    }
    if (!row.found) {
      row.size = 0;
      row.f_achieved = 0.0;
      row.calls = trace.calls.gain_calls;
    }
    report.rows.push_back(std::move(row));
  }
  if (trace_out != nullptr) *trace_out = std::move(trace);
  return report;
}

void write_summary_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  bool have_greedy = false;
  for (const ReportRow& row : rows) {
    if (row.algorithm == "greedy") have_greedy = true;
  }

  out << "utility,algorithm,alpha,M,Q,eps_tilde,size,f_achieved,calls,stored,"
         "ms";
  if (have_greedy) out << ",size_vs_greedy,calls_vs_greedy";
  out << '\n';

  const auto matching_greedy = [&rows](const ReportRow& row)
      -> const ReportRow* {
    for (const ReportRow& g : rows) {
      if (g.algorithm == "greedy" && g.utility == row.utility &&
          g.q == row.q && g.eps_tilde == row.eps_tilde && g.found) {
        return &g;
      }
    }
    return nullptr;
  };

  for (const ReportRow& row : rows) {
    out << row.utility << ',' << row.algorithm << ','
        << format_double(row.alpha) << ',' << row.memory << ','
        << format_double(row.q) << ',' << format_double(row.eps_tilde) << ','
        << (row.found ? row.size : 0) << ','
        << format_double(row.found ? row.f_achieved : 0.0) << ',' << row.calls
        << ',' << row.stored << ',' << format_double(row.ms);
    if (have_greedy) {
      const ReportRow* g = matching_greedy(row);
      double size_ratio = std::nan("");
      double calls_ratio = std::nan("");
      if (g != nullptr && row.found && g->size > 0 && g->calls > 0) {
        size_ratio = static_cast<double>(row.size) / g->size;
        calls_ratio = static_cast<double>(row.calls) / g->calls;
      }
      out << ',' << format_double(size_ratio) << ','
          << format_double(calls_ratio);
    }
    out << '\n';
  }
}

std::vector<ReportRow> read_summary_csv(std::istream& in,
                                        const std::string& source_name) {
  LineScanner scanner(in, source_name);
  std::string_view line;
  if (!scanner.next(line)) {
    throw std::runtime_error(scanner.where("missing CSV header"));
  }

  const auto split_commas = [](std::string_view s) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = s.find(',', start);
      if (comma == std::string_view::npos) {
        fields.push_back(s.substr(start));
        break;
      }
      fields.push_back(s.substr(start, comma - start));
      start = comma + 1;
    }
    return fields;
  };

  const auto header = split_commas(line);
  if (header.size() < 11 || header[0] != "utility" ||
      header[10] != "ms") {
    throw std::runtime_error(scanner.where("unrecognized CSV header"));
  }

  std::vector<ReportRow> rows;
  while (scanner.next(line)) {
    const auto fields = split_commas(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error(scanner.where(
          "row has " + std::to_string(fields.size()) + " fields, expected " +
          std::to_string(header.size())));
    }
    ReportRow row;
    row.utility = std::string(fields[0]);
    row.algorithm = std::string(fields[1]);
    row.alpha = parse_double(fields[2], scanner);
    row.memory = static_cast<std::size_t>(parse_unsigned(fields[3], scanner));
    row.q = parse_double(fields[4], scanner);
    row.eps_tilde = parse_double(fields[5], scanner);
    row.size = static_cast<std::size_t>(parse_unsigned(fields[6], scanner));
    row.f_achieved = parse_double(fields[7], scanner);
    row.calls = parse_unsigned(fields[8], scanner);
    row.stored = static_cast<std::size_t>(parse_unsigned(fields[9], scanner));
    row.ms = parse_double(fields[10], scanner);
    row.found = !(row.size == 0 && row.f_achieved == 0.0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace subcover
