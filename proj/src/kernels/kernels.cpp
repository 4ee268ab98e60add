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

#include "subcover/kernels.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace subcover::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double squared_distance_scalar(const double* a, const double* b,
                               std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

std::uint64_t popcount_words_scalar(const std::uint64_t* w, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(w[i]);
  return total;
}

struct Active {
  const detail::KernelOps* ops;
  Backend backend;
};

Active detect_best() {
#if defined(SUBCOVER_HAVE_AVX2)
  if (detail::avx2_supported()) return {&detail::avx2_ops(), Backend::kAvx2};
#endif
#if defined(SUBCOVER_HAVE_NEON)
  return {&detail::neon_ops(), Backend::kNeon};
#endif
  return {&detail::scalar_ops(), Backend::kScalar};
}

std::atomic<const detail::KernelOps*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::kScalar};

const detail::KernelOps& active_ops() {
  const detail::KernelOps* ops = g_ops.load(std::memory_order_acquire);
  if (ops == nullptr) {
    const Active best = detect_best();
    g_backend.store(best.backend, std::memory_order_relaxed);
    g_ops.store(best.ops, std::memory_order_release);
    ops = best.ops;
  }
  return *ops;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

}  // namespace

namespace detail {

const KernelOps& scalar_ops() {
  static const KernelOps ops{dot_scalar, squared_distance_scalar,
                             popcount_words_scalar};
  return ops;
}

}  // namespace detail

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

Backend active_backend() {
  active_ops();
  return g_backend.load(std::memory_order_relaxed);
}

bool set_backend(Backend backend) {
  const detail::KernelOps* ops = nullptr;
  switch (backend) {
    case Backend::kScalar:
      ops = &detail::scalar_ops();
      break;
    case Backend::kAvx2:
#if defined(SUBCOVER_HAVE_AVX2)
      if (detail::avx2_supported()) ops = &detail::avx2_ops();
#endif
      break;
    case Backend::kNeon:
#if defined(SUBCOVER_HAVE_NEON)
      ops = &detail::neon_ops();
#endif
      break;
  }
  if (ops == nullptr) return false;
  g_backend.store(backend, std::memory_order_relaxed);
  g_ops.store(ops, std::memory_order_release);
  return true;
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out{Backend::kScalar};
#if defined(SUBCOVER_HAVE_AVX2)
  if (detail::avx2_supported()) out.push_back(Backend::kAvx2);
#endif
#if defined(SUBCOVER_HAVE_NEON)
  out.push_back(Backend::kNeon);
#endif
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  return active_ops().dot(a.data(), b.data(), a.size());
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  return active_ops().squared_distance(a.data(), b.data(), a.size());
}

std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
  return active_ops().popcount_words(words.data(), words.size());
}

}  // namespace subcover::kernels
