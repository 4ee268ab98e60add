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

#ifndef SUBCOVER_HARD_INSTANCE_HPP_
#define SUBCOVER_HARD_INSTANCE_HPP_

// Adversarial set systems built on a complete t-ary tree with k layers.
// Layer 1 holds the leaves, layer k the root; the vertex at (layer i,
// position p) owns the contiguous base block of ℓ·t^(i-1) element ids
// starting at p·ℓ·t^(i-1), so the leaf blocks partition the universe and the
// root owns all of it. A pointer assignment picks one child per internal
// vertex, inducing a single root-to-leaf path; whether the reached leaf's bit
// is 1 or 0 flips the instance between an easy cover (k sets suffice) and a
// hard one (at least ℓ sets are needed).

#include <cstdint>
#include <vector>

#include "subcover/cover_instance.hpp"
#include "subcover/element.hpp"

namespace subcover {

struct TreeSpec {
  std::uint32_t arity = 2;       // t >= 2
  std::uint32_t layers = 2;      // k >= 2
  std::uint32_t leaf_block = 2;  // ℓ >= t

  /** Throws std::invalid_argument on bad shape or id overflow. */
  void validate() const;

  /** ℓ·t^(k-1). */
  std::uint64_t universe_size() const;

  /** Vertices in layer i (1 = leaves, k = root): t^(k-i). */
  std::uint64_t layer_width(std::uint32_t layer) const;
};

/**
 * One pointer per internal vertex plus one bit per leaf.
 * child_choice[i-2][p] is the chosen child (0..t-1) of the vertex at layer i,
 * position p, for i = 2..k; leaf_bits[p] is b of leaf p.
 */
struct PointerInput {
  std::vector<std::vector<std::uint32_t>> child_choice;
  std::vector<std::uint8_t> leaf_bits;
};

PointerInput random_pointer_input(const TreeSpec& spec, std::uint64_t seed);

/** Half-open id range [lo, hi). */
struct IdRange {
  ElementId lo = 0;
  ElementId hi = 0;
  std::uint64_t size() const { return std::uint64_t{hi} - lo; }
};

/** Base block of the vertex at (layer, pos). */
IdRange base_set_range(const TreeSpec& spec, std::uint32_t layer,
                       std::uint64_t pos);

/** All base blocks, indexed [layer-1][pos]. */
std::vector<std::vector<IdRange>> build_base_sets(const TreeSpec& spec);

/** Positions of the induced root-to-leaf path, root first (layers k..1). */
std::vector<std::uint64_t> induced_path(const TreeSpec& spec,
                                        const PointerInput& pi);

/** Half-open range of set indices contributed by one player. */
struct PlayerRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct HardInstance {
  CoverInstance instance;  // stream order: player 1 first, then 2, ..., k
  double q = 0.0;          // ℓ·t^(k-1), the full universe
  bool case_bit = false;   // b at the path leaf
  std::uint64_t path_leaf = 0;
  std::vector<PlayerRange> players;  // players[p-1] = player p's sets
};

/**
 * Builds the full set family: player 1 contributes the base block of every
 * leaf whose bit is 1; players i = 2..k-1 contribute, for every vertex of
 * layer i, its base block minus the chosen child's; player k contributes the
 * root's block minus the chosen child's plus one singleton for every element
 * of the chosen child's block.
 */
HardInstance build_instance(const TreeSpec& spec, const PointerInput& pi);

/**
 * The k set indices whose union is the whole universe: the root set, the
 * path sets of layers k-1..2, and the path leaf's base set. Requires the
 * path leaf's bit to be 1; throws std::runtime_error("no witness exists")
 * otherwise.
 */
std::vector<ElementId> path_witness(const TreeSpec& spec,
                                    const PointerInput& pi);

struct GapReport {
  bool case_bit = false;
  std::size_t min_cover = 0;
  // Case 0 only: whether min_cover also clears the sharper ℓ+k-1 bound.
  bool refined_bound_holds = false;
};

/**
 * Exhaustively certifies the dichotomy on a small instance (set count <= 22):
 * bit 1 at the path leaf implies min_cover <= k, bit 0 implies
 * min_cover >= ℓ.
 */
GapReport verify_gap(const TreeSpec& spec, const PointerInput& pi);

}  // namespace subcover

#endif  // SUBCOVER_HARD_INSTANCE_HPP_
