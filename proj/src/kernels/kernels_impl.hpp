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

#ifndef SUBCOVER_KERNELS_IMPL_HPP
#define SUBCOVER_KERNELS_IMPL_HPP

#include <cstddef>
#include <cstdint>

namespace subcover::kernels::detail {

// Raw-pointer kernel table. One instance per backend; the dispatcher in
// kernels.cpp holds a pointer to the active table.
struct KernelOps {
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  std::uint64_t (*popcount_words)(const std::uint64_t* w, std::size_t n);
};

const KernelOps& scalar_ops();

#if defined(SUBCOVER_HAVE_AVX2)
bool avx2_supported();
const KernelOps& avx2_ops();
#endif

#if defined(SUBCOVER_HAVE_NEON)
const KernelOps& neon_ops();
#endif

}  // namespace subcover::kernels::detail

#endif  // SUBCOVER_KERNELS_IMPL_HPP
