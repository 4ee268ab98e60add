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

// End-to-end tests that drive the installed binary through a shell, checking
// exit codes, CSV output, and determinism. SUBCOVER_CLI_PATH is injected by
// the build.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "subcover/cover_instance.hpp"
#include "subcover/greedy.hpp"
#include "subcover/coverage.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("subcover_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string(SUBCOVER_CLI_PATH) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << content;
  return p;
}

// Strips the ms column (and anything after it) from every data row so two
// runs can be compared byte-for-byte; wall time is the one nondeterministic
// column by design.
std::string strip_ms(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      out << line << '\n';
      continue;
    }
    std::size_t commas = 0;
    std::size_t cut = line.size();
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == ',') {
        ++commas;
        if (commas == 10) {
          cut = i;
          break;
        }
      }
    }
    out << line.substr(0, cut) << '\n';
  }
  return out.str();
}

const std::string kRing =
    "0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n";

TEST_CASE("cli: stream output is deterministic apart from wall time") {
  const fs::path g = write_file("ring.edges", kRing);
  const std::string args = "stream --utility domset --input " + g.string() +
                           " --Q 5 --memory 8 --eps-tilde 0.5,0.25";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(strip_ms(a.out) == strip_ms(b.out));
  CHECK(a.out.find("domset,stream,2,8,5,0.5,") != std::string::npos);
}

TEST_CASE("cli: an empty stream reports AssumptionViolated and exits 2") {
  const fs::path g = write_file("empty.sets", "6 0\n");
  const CliResult r = run_cli("stream --utility setcover --input " +
                              g.string() + " --Q 6 --memory 8");
  CHECK(r.exit_code == 2);
  // found=false rows carry size 0 and utility 0.
  CHECK(r.out.find("setcover,stream,2,8,6,0.5,0,0,0,0,") != std::string::npos);
}

TEST_CASE("cli: malformed input fails with the offending line number") {
  const fs::path g = write_file("bad.sets", "5 1\n0 oops\n");
  const CliResult r = run_cli("stream --utility setcover --input " +
                              g.string() + " --Q 5 --memory 8");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("bad.sets:2") != std::string::npos);
}

TEST_CASE("cli: invalid alpha is rejected as an error") {
  const fs::path g = write_file("ring2.edges", kRing);
  const CliResult r =
      run_cli("stream --utility domset --input " + g.string() +
              " --Q 5 --memory 8 --alpha 3");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("alpha") != std::string::npos);
}

TEST_CASE("cli: gen-hard emits an instance, a sidecar, and streams well") {
  const fs::path inst = scratch_dir() / "hard.sets";
  const CliResult gen = run_cli(
      "gen-hard --arity 2 --layers 3 --leaf-block 4 --case 1 --seed 11 "
      "--out " +
      inst.string());
  REQUIRE(gen.exit_code == 0);
  REQUIRE(fs::exists(inst));
  REQUIRE(fs::exists(inst.string() + ".meta"));
  {
    std::istringstream meta(slurp(inst.string() + ".meta"));
    std::string t, k, ell, case_bit, leaf, q;
    meta >> t >> k >> ell >> case_bit >> leaf >> q;
    CHECK(t == "2");
    CHECK(k == "3");
    CHECK(ell == "4");
    CHECK(case_bit == "1");
    CHECK(q == "16");
  }

  // The streamed sieve must find a cover not much larger than the optimum.
  const CliResult run = run_cli("stream --utility setcover --input " +
                                inst.string() +
                                " --Q 16 --memory 32 --eps-tilde 0.5");
  REQUIRE(run.exit_code == 0);

  const subcover::CoverInstance parsed =
      subcover::load_cover_instance(inst.string());
  subcover::SetCoverOracle oracle(parsed);
  std::vector<subcover::ElementId> ids(parsed.sets.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = static_cast<subcover::ElementId>(i);
  }
  const subcover::OptResult opt =
      subcover::brute_force_kstar(oracle, ids, 16.0);
  REQUIRE(opt.feasible);

  // Parse the size cell of the single data row.
  std::istringstream rows(run.out);
  std::string header, row;
  REQUIRE(std::getline(rows, header));
  REQUIRE(std::getline(rows, row));
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream rowin(row);
  while (std::getline(rowin, cell, ',')) cells.push_back(cell);
  REQUIRE(cells.size() >= 8);
  const std::size_t size = std::stoul(cells[6]);
  CHECK(size <= 4 * opt.k_star);  // 2k*/ε̃ at ε̃ = 0.5
}

TEST_CASE("cli: shuffled gen-hard output keeps the same set multiset") {
  const fs::path plain = scratch_dir() / "plain.sets";
  const fs::path mixed = scratch_dir() / "mixed.sets";
  REQUIRE(run_cli("gen-hard --layers 2 --leaf-block 2 --seed 4 --out " +
                  plain.string())
              .exit_code == 0);
  REQUIRE(run_cli("gen-hard --layers 2 --leaf-block 2 --seed 4 "
                  "--shuffle-seed 9 --out " +
                  mixed.string())
              .exit_code == 0);
  auto a = subcover::load_cover_instance(plain.string()).sets;
  auto b = subcover::load_cover_instance(mixed.string()).sets;
  REQUIRE(a.size() == b.size());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("cli: lazy matches greedy sizes and spends no more calls") {
  const fs::path inst = scratch_dir() / "base.sets";
  REQUIRE(run_cli("gen-hard --layers 3 --leaf-block 4 --case 1 --seed 2 "
                  "--out " +
                  inst.string())
              .exit_code == 0);
  const std::string common = " --utility setcover --input " + inst.string() +
                             " --Q 16 --eps-tilde 0.5,0.1";
  const CliResult g = run_cli("greedy" + common);
  const CliResult l = run_cli("lazy" + common);
  REQUIRE(g.exit_code == 0);
  REQUIRE(l.exit_code == 0);

  auto sizes_and_calls = [](const std::string& csv) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream row(line);
      while (std::getline(row, cell, ',')) cells.push_back(cell);
      out.emplace_back(cells[6], cells[8]);
    }
    return out;
  };
  const auto gs = sizes_and_calls(g.out);
  const auto ls = sizes_and_calls(l.out);
  REQUIRE(gs.size() == ls.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CHECK(gs[i].first == ls[i].first);
    CHECK(std::stoull(ls[i].second) <= std::stoull(gs[i].second));
  }
}

TEST_CASE("cli: summary merges run files and adds ratio columns") {
  const fs::path inst = scratch_dir() / "merge.sets";
  REQUIRE(run_cli("gen-hard --layers 2 --leaf-block 4 --case 1 --seed 6 "
                  "--out " +
                  inst.string())
              .exit_code == 0);
  const std::string common = " --utility setcover --input " + inst.string() +
                             " --Q 8 --eps-tilde 0.5";
  const fs::path s_csv = scratch_dir() / "s.csv";
  const fs::path g_csv = scratch_dir() / "g.csv";
  REQUIRE(run_cli("stream" + common + " --memory 16 --out " + s_csv.string())
              .exit_code == 0);
  REQUIRE(run_cli("greedy" + common + " --out " + g_csv.string()).exit_code ==
          0);
  const CliResult merged =
      run_cli("summary " + s_csv.string() + " " + g_csv.string());
  REQUIRE(merged.exit_code == 0);
  std::istringstream in(merged.out);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header ==
        "utility,algorithm,alpha,M,Q,eps_tilde,size,f_achieved,calls,stored,"
        "ms,size_vs_greedy,calls_vs_greedy");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("cli: snapshots reproduce query answers") {
  const fs::path inst = scratch_dir() / "snap.sets";
  REQUIRE(run_cli("gen-hard --layers 3 --leaf-block 4 --case 1 --seed 3 "
                  "--out " +
                  inst.string())
              .exit_code == 0);
  const fs::path snap = scratch_dir() / "sieve.snap";
  const std::string common = " --utility setcover --input " + inst.string() +
                             " --Q 16 --memory 32 --eps-tilde 0.5,0.25";
  const CliResult first =
      run_cli("stream" + common + " --save-state " + snap.string());
  REQUIRE(first.exit_code == 0);
  const CliResult second =
      run_cli("stream" + common + " --load-state " + snap.string());
  REQUIRE(second.exit_code == 0);

  // Compare found/size/f columns; the replayed run reports calls = 0.
  auto key_cells = [](const std::string& csv) {
    std::vector<std::string> keys;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream row(line);
      while (std::getline(row, cell, ',')) cells.push_back(cell);
      keys.push_back(cells[5] + "|" + cells[6] + "|" + cells[7]);
    }
    return keys;
  };
  CHECK(key_cells(first.out) == key_cells(second.out));
}

TEST_CASE("cli: fractional targets need a known total for logdet") {
  const fs::path pts = write_file("p.csv", "0,0\n1,0\n0,1\n2,2\n");
  const CliResult bad =
      run_cli("greedy --utility logdet --input " + pts.string() +
              " --q-frac 0.5");
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("--f-total") != std::string::npos);
  const CliResult good =
      run_cli("greedy --utility logdet --input " + pts.string() +
              " --q-frac 0.5 --f-total 1.2 --eps-tilde 0.5");
  CHECK(good.exit_code == 0);
}

TEST_CASE("cli: q-frac resolves against structural totals for graphs") {
  const fs::path g = write_file("frac.edges", kRing);
  // 5 vertices; q-frac 0.8 -> Q = 4.
  const CliResult r = run_cli("greedy --utility domset --input " + g.string() +
                              " --q-frac 0.8 --eps-tilde 0.5");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("domset,greedy,0,0,4,0.5,") != std::string::npos);
}

TEST_CASE("cli: check audits an oracle and reports the verdict") {
  const fs::path g = write_file("audit.edges", kRing);
  const CliResult r = run_cli("check --utility vcover --input " + g.string() +
                              " --trials 200 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
}

TEST_CASE("cli: unknown utilities are rejected at parse time") {
  const CliResult r = run_cli("stream --utility nonsense --input x --Q 1 "
                              "--memory 4");
  CHECK(r.exit_code == 1);
}

}  // namespace
