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

#ifndef SUBCOVER_COVER_INSTANCE_HPP_
#define SUBCOVER_COVER_INSTANCE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subcover/element.hpp"

namespace subcover {

/**
 * Explicit set system: a universe {0..universe_size-1} and an ordered family
 * of sets over it. Family order is the stream order. Sets may overlap and may
 * repeat; every listed id must be < universe_size.
 *
 * Text format: first significant line `n m`, then m lines, line i holding the
 * whitespace-separated element ids of set i. `#` starts a comment. Because
 * blank lines are skipped, an empty set is not representable in the text
 * form; in-memory instances may still hold empty sets.
 */
struct CoverInstance {
  std::uint32_t universe_size = 0;
  std::vector<std::vector<ElementId>> sets;
  std::vector<std::string> labels;  // optional; empty or one per set

  std::size_t set_count() const { return sets.size(); }

  /** Throws std::invalid_argument on any out-of-range id or label mismatch. */
  void validate() const;
};

/** Parses the text format; `source_name` seeds error messages. */
CoverInstance read_cover_instance(std::istream& in,
                                  const std::string& source_name = "<input>");

/** Reads a file; throws std::runtime_error if unreadable or malformed. */
CoverInstance load_cover_instance(const std::string& path);

/** Writes the text format (labels are not persisted). */
void write_cover_instance(std::ostream& out, const CoverInstance& instance);

}  // namespace subcover

#endif  // SUBCOVER_COVER_INSTANCE_HPP_
