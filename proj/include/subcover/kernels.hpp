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

#ifndef SUBCOVER_KERNELS_HPP
#define SUBCOVER_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subcover::kernels {

/// Arithmetic inner loops used by the utility oracles. Every kernel has a
/// scalar reference implementation; vectorized variants (AVX2 on x86-64,
/// NEON on aarch64) are selected at runtime when the CPU supports them and
/// are equivalence-tested against the scalar reference.
enum class Backend { kScalar, kAvx2, kNeon };

const char* backend_name(Backend backend);

/// Backend currently used by the free functions below. The first call
/// auto-detects the best supported backend.
Backend active_backend();

/// Forces a specific backend. Returns false (and changes nothing) if the
/// backend is not compiled in or the CPU lacks the instructions.
bool set_backend(Backend backend);

/// Backends usable on this machine, scalar first.
std::vector<Backend> supported_backends();

/// Inner product of two equal-length vectors.
double dot(std::span<const double> a, std::span<const double> b);

/// Squared Euclidean distance between two equal-length vectors.
double squared_distance(std::span<const double> a, std::span<const double> b);

/// Total number of set bits across a word array.
std::uint64_t popcount_words(std::span<const std::uint64_t> words);

}  // namespace subcover::kernels

#endif  // SUBCOVER_KERNELS_HPP
