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

#ifndef SUBCOVER_LOGDET_HPP_
#define SUBCOVER_LOGDET_HPP_

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "subcover/element.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

/** Flat row-major storage for n points of a shared dimension. */
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dimension, std::vector<double> data);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return count_; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dimension_, dimension_};
  }
  void append(std::span<const double> point);

 private:
  std::size_t dimension_ = 0;
  std::size_t count_ = 0;
  std::vector<double> data_;
};

/**
 * Point file: one row per point, numeric columns separated by commas and/or
 * whitespace, `#` comments, optional non-numeric header row.
 */
PointSet read_points_csv(std::istream& in,
                         const std::string& source_name = "<input>");
PointSet load_points_csv(const std::string& path);

/** exp(-‖x-y‖² / (2h²)); rejects dimension mismatch and h <= 0. */
double gaussian_kernel(std::span<const double> x, std::span<const double> y,
                       double h);

/** Median of all pairwise Euclidean distances (lower median, n >= 2). */
double median_pairwise_distance(const PointSet& points);

struct KernelConfig {
  double sigma = 1.0;      // regularization, > 0
  double bandwidth = 1.0;  // kernel width h, > 0
  PointSet points;

  void validate() const;
};

/**
 * Active-set utility f(S) = ½·ln det(I + σ⁻²·K_{S,S}) with the Gaussian
 * kernel K_ij = exp(-‖x_i-x_j‖²/(2h²)). Natural logarithm.
 *
 * The per-solution state holds the lower-triangular Cholesky factor of
 * I + σ⁻²·K_{S,S} in packed form. A gain query extends the factor by one
 * trial row without committing it; the gain is the log of the new pivot.
 * Kernel entries are computed on demand from the stored points; the full
 * kernel matrix is never materialized.
 */
class LogDetOracle final : public UtilityOracle {
 public:
  explicit LogDetOracle(KernelConfig config);

  std::size_t ground_size() const override;
  const KernelConfig& config() const { return config_; }

 protected:
  std::unique_ptr<SolutionState> make_fresh_state() const override;
  double value_impl(const SolutionState& state) const override;
  double gain_impl(const SolutionState& state, ElementId e) const override;
  void extend_impl(SolutionState& state, ElementId e) const override;

 private:
  KernelConfig config_;
  double inv_sigma_sq_ = 1.0;
};

/**
 * Recomputes ½·ln det(I + σ⁻²·K_{S,S}) from scratch with a dense
 * factorization, as an independent cross-check of the incremental path.
 * |S| must be <= 2000.
 */
double logdet_reference(const KernelConfig& config,
                        const std::vector<ElementId>& selection);

}  // namespace subcover

#endif  // SUBCOVER_LOGDET_HPP_
