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

#include "subcover/sieve.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "subcover/textio.hpp"

namespace subcover {

void SieveConfig::validate() const {
  if (memory_slots < 1) {
    throw std::invalid_argument("memory budget must be at least 1 slot");
  }
  if (!(alpha > 1.0) || !(alpha <= 2.0)) {
    throw std::invalid_argument("alpha must lie in (1, 2]");
  }
  if (!(target_q > 0.0)) {
    throw std::invalid_argument("target Q must be positive");
  }
}

Sieve::Sieve(const SieveConfig& config, const UtilityOracle& oracle)
    : config_(config), oracle_(&oracle) {
  config_.validate();
  // Levels are added while the running capacity sum Σ⌈α^j⌉ stays within M;
  // α > 1 guarantees termination and M >= 1 admits at least level 0.
  double power = 1.0;  // α^j
  std::size_t capacity_sum = 0;
  for (std::size_t j = 0;; ++j) {
    const double cap_real = std::ceil(power);
    if (cap_real > static_cast<double>(std::numeric_limits<std::size_t>::max())) {
      break;
    }
    const std::size_t cap = static_cast<std::size_t>(cap_real);
    if (capacity_sum + cap > config_.memory_slots) break;
    capacity_sum += cap;
    Level level;
    level.threshold = config_.target_q / power;
    level.capacity = cap;
    level.state = oracle_->fresh_state();
    levels_.push_back(std::move(level));
    power *= config_.alpha;
  }
}

void Sieve::ingest(ElementId e) {
  for (Level& level : levels_) {
    if (level.members.size() == level.capacity) continue;  // no oracle call
    const double gain = oracle_->gain(*level.state, e);
    if (gain >= level.threshold) {
      oracle_->extend(*level.state, e);
      level.members.push_back(e);
      level.cached_utility += gain;
    }
  }
  ++elements_seen_;
}

QueryResult Sieve::query(double epsilon_tilde) const {
  if (!(epsilon_tilde > 0.0) || !(epsilon_tilde < 1.0)) {
    throw std::invalid_argument("epsilon-tilde must lie in (0, 1)");
  }
  const double target = (1.0 - epsilon_tilde) * config_.target_q - 1e-9;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (levels_[j].cached_utility >= target) {
      QueryResult result;
      result.found = true;
      result.level = j;
      result.members = levels_[j].members;
      result.utility = levels_[j].cached_utility;
      return result;
    }
  }
  return QueryResult{};
}

SieveFootprint Sieve::footprint() const {
  SieveFootprint fp;
  fp.levels = levels_.size();
  for (const Level& level : levels_) {
    fp.stored_elements += level.members.size();
    fp.capacity_sum += level.capacity;
    fp.state_bytes += level.state->memory_bytes() +
                      level.members.capacity() * sizeof(ElementId);
  }
  return fp;
}

void Sieve::save_snapshot(std::ostream& out) const {
  out << "ESC1 " << config_.memory_slots << ' ' << format_double(config_.alpha)
      << ' ' << format_double(config_.target_q) << ' ' << levels_.size()
      << '\n';
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    const Level& level = levels_[j];
    out << j << ' ' << format_double(level.threshold) << ' ' << level.capacity
        << ' ' << level.members.size() << '\n';
    if (!level.members.empty()) {
      for (std::size_t i = 0; i < level.members.size(); ++i) {
        if (i > 0) out << ' ';
        out << level.members[i];
      }
      out << '\n';
    }
  }
}

Sieve Sieve::load_snapshot(std::istream& in, const UtilityOracle& oracle,
                           const std::string& source_name) {
  LineScanner scanner(in, source_name);
  std::string_view line;
  if (!scanner.next(line)) {
    throw std::runtime_error(scanner.where("missing snapshot header"));
  }
  const auto header = split_fields(line);
  if (header.size() != 5 || header[0] != "ESC1") {
    throw std::runtime_error(
        scanner.where("expected header `ESC1 M alpha Q L`"));
  }
  SieveConfig config;
  config.memory_slots =
      static_cast<std::size_t>(parse_unsigned(header[1], scanner));
  config.alpha = parse_double(header[2], scanner);
  config.target_q = parse_double(header[3], scanner);
  const std::uint64_t level_count = parse_unsigned(header[4], scanner);

  Sieve sieve(config, oracle);
  if (sieve.level_count() != level_count) {
    throw std::runtime_error(scanner.where(
        "snapshot declares " + std::to_string(level_count) +
        " levels but the configuration yields " +
        std::to_string(sieve.level_count())));
  }
  for (std::size_t j = 0; j < sieve.levels_.size(); ++j) {
    Level& level = sieve.levels_[j];
    if (!scanner.next(line)) {
      throw std::runtime_error(scanner.where("missing level descriptor"));
    }
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw std::runtime_error(
          scanner.where("level descriptor must be `j threshold capacity "
                        "size`"));
    }
    const std::uint64_t idx = parse_unsigned(fields[0], scanner);
    const double threshold = parse_double(fields[1], scanner);
    const std::uint64_t capacity = parse_unsigned(fields[2], scanner);
    const std::uint64_t size = parse_unsigned(fields[3], scanner);
    if (idx != j || capacity != level.capacity) {
      throw std::runtime_error(
          scanner.where("level descriptor disagrees with the configuration"));
    }
    if (std::abs(threshold - level.threshold) >
        1e-9 * std::max(1.0, std::abs(level.threshold))) {
      throw std::runtime_error(
          scanner.where("level threshold disagrees with the configuration"));
    }
    if (size > capacity) {
      throw std::runtime_error(scanner.where("level size exceeds capacity"));
    }
    if (size > 0) {
      if (!scanner.next(line)) {
        throw std::runtime_error(scanner.where("missing member-id line"));
      }
      const auto ids = split_fields(line);
      if (ids.size() != size) {
        throw std::runtime_error(scanner.where(
            "expected " + std::to_string(size) + " member ids, got " +
            std::to_string(ids.size())));
      }
      for (const std::string_view token : ids) {
        const std::uint64_t id = parse_unsigned(token, scanner);
        if (id > std::numeric_limits<ElementId>::max()) {
          throw std::runtime_error(scanner.where("member id too large"));
        }
        const ElementId e = static_cast<ElementId>(id);
        oracle.extend(*level.state, e);
        level.members.push_back(e);
      }
      level.cached_utility = oracle.value(*level.state);
    }
  }
  if (scanner.next(line)) {
    throw std::runtime_error(scanner.where("trailing content after levels"));
  }
  return sieve;
}

}  // namespace subcover
