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

#include "subcover/hard_instance.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "rng_util.hpp"
#include "subcover/coverage.hpp"
#include "subcover/greedy.hpp"

namespace subcover {
namespace {

// t^e with overflow detection against the uint64 range.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::invalid_argument("tree too large: id space overflow");
    }
    result *= base;
  }
  return result;
}

void push_range(std::vector<ElementId>& out, IdRange range) {
  for (ElementId x = range.lo; x < range.hi; ++x) out.push_back(x);
}

// range minus an interior sub-range, as an explicit id list.
std::vector<ElementId> range_minus(IdRange outer, IdRange inner) {
  std::vector<ElementId> out;
  out.reserve(outer.size() - inner.size());
  push_range(out, {outer.lo, inner.lo});
  push_range(out, {inner.hi, outer.hi});
  return out;
}

}  // namespace

void TreeSpec::validate() const {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  if (layers < 2) throw std::invalid_argument("layers must be at least 2");
  if (leaf_block < arity) {
    throw std::invalid_argument(
        "leaf block size must be at least the arity");
  }
  const std::uint64_t leaves = checked_pow(arity, layers - 1);
  if (leaves > std::numeric_limits<std::uint64_t>::max() / leaf_block) {
    throw std::invalid_argument("tree too large: id space overflow");
  }
  if (leaves * leaf_block > std::numeric_limits<ElementId>::max()) {
    throw std::invalid_argument("universe exceeds the 32-bit element range");
  }
}

std::uint64_t TreeSpec::universe_size() const {
  return checked_pow(arity, layers - 1) * leaf_block;
}

std::uint64_t TreeSpec::layer_width(std::uint32_t layer) const {
  return checked_pow(arity, layers - layer);
}

PointerInput random_pointer_input(const TreeSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  PointerInput pi;
  pi.child_choice.resize(spec.layers - 1);
  for (std::uint32_t layer = 2; layer <= spec.layers; ++layer) {
    auto& choices = pi.child_choice[layer - 2];
    choices.resize(spec.layer_width(layer));
    for (auto& c : choices) {
      c = static_cast<std::uint32_t>(internal::next_below(rng, spec.arity));
    }
  }
  pi.leaf_bits.resize(spec.layer_width(1));
  for (auto& b : pi.leaf_bits) {
    b = static_cast<std::uint8_t>(internal::next_below(rng, 2));
  }
  return pi;
}

IdRange base_set_range(const TreeSpec& spec, std::uint32_t layer,
                       std::uint64_t pos) {
  if (layer < 1 || layer > spec.layers || pos >= spec.layer_width(layer)) {
    throw std::invalid_argument("vertex outside the tree");
  }
  const std::uint64_t block =
      checked_pow(spec.arity, layer - 1) * spec.leaf_block;
  return {static_cast<ElementId>(pos * block),
          static_cast<ElementId>((pos + 1) * block)};
}

std::vector<std::vector<IdRange>> build_base_sets(const TreeSpec& spec) {
  spec.validate();
  std::vector<std::vector<IdRange>> layers(spec.layers);
  for (std::uint32_t layer = 1; layer <= spec.layers; ++layer) {
    auto& row = layers[layer - 1];
    const std::uint64_t width = spec.layer_width(layer);
    row.reserve(width);
    for (std::uint64_t p = 0; p < width; ++p) {
      row.push_back(base_set_range(spec, layer, p));
    }
  }
  return layers;
}

namespace {

void require_pointers(const TreeSpec& spec, const PointerInput& pi) {
  if (pi.child_choice.size() != spec.layers - 1u ||
      pi.leaf_bits.size() != spec.layer_width(1)) {
    throw std::invalid_argument("pointer input does not match the tree");
  }
  for (std::uint32_t layer = 2; layer <= spec.layers; ++layer) {
    const auto& choices = pi.child_choice[layer - 2];
    if (choices.size() != spec.layer_width(layer)) {
      throw std::invalid_argument("pointer input does not match the tree");
    }
    for (const std::uint32_t c : choices) {
      if (c >= spec.arity) {
        throw std::invalid_argument("child choice outside the arity");
      }
    }
  }
}

}  // namespace

std::vector<std::uint64_t> induced_path(const TreeSpec& spec,
                                        const PointerInput& pi) {
  spec.validate();
  require_pointers(spec, pi);
  std::vector<std::uint64_t> path;
  path.reserve(spec.layers);
  std::uint64_t pos = 0;
  path.push_back(pos);
  for (std::uint32_t layer = spec.layers; layer >= 2; --layer) {
    pos = pos * spec.arity + pi.child_choice[layer - 2][pos];
    path.push_back(pos);
  }
  return path;
}

HardInstance build_instance(const TreeSpec& spec, const PointerInput& pi) {
  spec.validate();
  require_pointers(spec, pi);

  HardInstance hard;
  hard.instance.universe_size =
      static_cast<std::uint32_t>(spec.universe_size());
  hard.q = static_cast<double>(spec.universe_size());
  const auto path = induced_path(spec, pi);
  hard.path_leaf = path.back();
  hard.case_bit = pi.leaf_bits[hard.path_leaf] != 0;
  hard.players.resize(spec.layers);

  auto& sets = hard.instance.sets;
  auto& labels = hard.instance.labels;

  // Player 1: base block of every leaf whose bit is 1, ascending position.
  hard.players[0].begin = 0;
  for (std::uint64_t p = 0; p < spec.layer_width(1); ++p) {
    if (pi.leaf_bits[p] == 0) continue;
    std::vector<ElementId> set;
    push_range(set, base_set_range(spec, 1, p));
    sets.push_back(std::move(set));
    labels.push_back("leaf:" + std::to_string(p));
  }
  hard.players[0].end = sets.size();

  // Players 2..k-1: every vertex of the layer sheds its chosen child's block.
  for (std::uint32_t layer = 2; layer + 1 <= spec.layers; ++layer) {
    hard.players[layer - 1].begin = sets.size();
    for (std::uint64_t p = 0; p < spec.layer_width(layer); ++p) {
      const std::uint64_t child =
          p * spec.arity + pi.child_choice[layer - 2][p];
      sets.push_back(range_minus(base_set_range(spec, layer, p),
                                 base_set_range(spec, layer - 1, child)));
      labels.push_back("mid:" + std::to_string(layer) + ":" +
                       std::to_string(p));
    }
    hard.players[layer - 1].end = sets.size();
  }

  // Player k: the root remainder, then one singleton per element of the
  // chosen child's block so the player can cover the universe alone.
  hard.players[spec.layers - 1].begin = sets.size();
  const std::uint64_t root_child = pi.child_choice[spec.layers - 2][0];
  const IdRange shed = base_set_range(spec, spec.layers - 1, root_child);
  sets.push_back(
      range_minus(base_set_range(spec, spec.layers, 0), shed));
  labels.push_back("root");
  for (ElementId x = shed.lo; x < shed.hi; ++x) {
    sets.push_back({x});
    labels.push_back("single:" + std::to_string(x));
  }
  hard.players[spec.layers - 1].end = sets.size();

  hard.instance.validate();
  return hard;
}

std::vector<ElementId> path_witness(const TreeSpec& spec,
                                    const PointerInput& pi) {
  const HardInstance hard = build_instance(spec, pi);
  if (!hard.case_bit) throw std::runtime_error("no witness exists");
  const auto path = induced_path(spec, pi);

  std::vector<ElementId> witness;
  witness.reserve(spec.layers);
  // Root set is the first of player k's block.
  witness.push_back(
      static_cast<ElementId>(hard.players[spec.layers - 1].begin));
  // Path vertices of layers k-1..2; player i lists its layer by position.
  for (std::uint32_t layer = spec.layers - 1; layer >= 2; --layer) {
    const std::uint64_t pos = path[spec.layers - layer];
    witness.push_back(
        static_cast<ElementId>(hard.players[layer - 1].begin + pos));
  }
  // The path leaf's base set: player 1 keeps only bit-1 leaves, so the index
  // is the rank of the path leaf among them.
  std::uint64_t rank = 0;
  for (std::uint64_t p = 0; p < hard.path_leaf; ++p) {
    if (pi.leaf_bits[p] != 0) ++rank;
  }
  witness.push_back(static_cast<ElementId>(hard.players[0].begin + rank));
  return witness;
}

GapReport verify_gap(const TreeSpec& spec, const PointerInput& pi) {
  const HardInstance hard = build_instance(spec, pi);
  if (hard.instance.sets.size() > 22) {
    throw std::invalid_argument(
        "instance too large for exhaustive verification");
  }
  SetCoverOracle oracle(hard.instance);
  std::vector<ElementId> ground(hard.instance.sets.size());
  for (std::size_t i = 0; i < ground.size(); ++i) {
    ground[i] = static_cast<ElementId>(i);
  }
  const OptResult opt = brute_force_kstar(oracle, ground, hard.q);
  if (!opt.feasible) {
    throw std::logic_error("hard instance is not coverable");
  }
  GapReport report;
  report.case_bit = hard.case_bit;
  report.min_cover = opt.k_star;
  report.refined_bound_holds =
      !hard.case_bit &&
      opt.k_star >= std::size_t{spec.leaf_block} + spec.layers - 1;
  return report;
}

}  // namespace subcover
