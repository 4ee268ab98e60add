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

#include "subcover/logdet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "subcover/kernels.hpp"
#include "subcover/textio.hpp"

namespace subcover {
namespace {

// Packed lower-triangular Cholesky factor of I + inv_sigma_sq * K_{S,S}.
// Row i lives at offset i(i+1)/2 with length i+1; the diagonal is strictly
// positive and log_det_half equals the sum of log diagonal entries.
class CholeskyState final : public SolutionState {
 public:
  std::unique_ptr<SolutionState> clone() const override {
    return std::make_unique<CholeskyState>(*this);
  }
  std::size_t memory_bytes() const override {
    return factor.capacity() * sizeof(double) +
           selected.capacity() * sizeof(ElementId);
  }

  std::span<const double> rowspan(std::size_t i) const {
    return {factor.data() + i * (i + 1) / 2, i + 1};
  }

  std::vector<ElementId> selected;
  std::vector<double> factor;
  double log_det_half = 0.0;
};

}  // namespace

PointSet::PointSet(std::size_t dimension, std::vector<double> data)
    : dimension_(dimension), data_(std::move(data)) {
  if (dimension_ == 0) throw std::invalid_argument("point dimension is zero");
  if (data_.size() % dimension_ != 0) {
    throw std::invalid_argument("point data not a multiple of the dimension");
  }
  count_ = data_.size() / dimension_;
}

void PointSet::append(std::span<const double> point) {
  if (dimension_ == 0) {
    dimension_ = point.size();
    if (dimension_ == 0) {
      throw std::invalid_argument("point dimension is zero");
    }
  } else if (point.size() != dimension_) {
    throw std::invalid_argument("point dimension mismatch");
  }
  data_.insert(data_.end(), point.begin(), point.end());
  ++count_;
}

PointSet read_points_csv(std::istream& in, const std::string& source_name) {
  LineScanner scanner(in, source_name);
  PointSet points;
  std::string_view line;
  bool first = true;
  std::string buffer;
  std::vector<double> row;
  while (scanner.next(line)) {
    // Commas and whitespace both separate columns.
    buffer.assign(line);
    std::replace(buffer.begin(), buffer.end(), ',', ' ');
    const auto fields = split_fields(buffer);
    row.clear();
    bool numeric = true;
    for (const std::string_view f : fields) {
      try {
        row.push_back(parse_double(f, scanner));
      } catch (const std::runtime_error&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;  // header row
        continue;
      }
      throw std::runtime_error(scanner.where("non-numeric data row"));
    }
    first = false;
    if (points.size() > 0 && row.size() != points.dimension()) {
      throw std::runtime_error(scanner.where(
          "row has " + std::to_string(row.size()) + " columns, expected " +
          std::to_string(points.dimension())));
    }
    points.append(row);
  }
  return points;
}

PointSet load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_points_csv(in, path);
}

double gaussian_kernel(std::span<const double> x, std::span<const double> y,
                       double h) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  if (!(h > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  return std::exp(-kernels::squared_distance(x, y) / (2.0 * h * h));
}

double median_pairwise_distance(const PointSet& points) {
  const std::size_t n = points.size();
  if (n < 2) {
    throw std::invalid_argument("need at least two points for a median");
  }
  std::vector<double> dists;
  dists.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dists.push_back(
          std::sqrt(kernels::squared_distance(points.row(i), points.row(j))));
    }
  }
  const std::size_t mid = (dists.size() - 1) / 2;
  std::nth_element(dists.begin(), dists.begin() + mid, dists.end());
  return dists[mid];
}

void KernelConfig::validate() const {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive");
  }
}

LogDetOracle::LogDetOracle(KernelConfig config) : config_(std::move(config)) {
  config_.validate();
  inv_sigma_sq_ = 1.0 / (config_.sigma * config_.sigma);
}

std::size_t LogDetOracle::ground_size() const { return config_.points.size(); }

std::unique_ptr<SolutionState> LogDetOracle::make_fresh_state() const {
  return std::make_unique<CholeskyState>();
}

double LogDetOracle::value_impl(const SolutionState& state) const {
  return state_as<CholeskyState>(state).log_det_half;
}

namespace {

double kernel_entry(const KernelConfig& config, ElementId a, ElementId b) {
  const double k = gaussian_kernel(config.points.row(a), config.points.row(b),
                                   config.bandwidth);
  if (!std::isfinite(k)) {
    throw std::runtime_error("non-finite kernel entry for points " +
                             std::to_string(a) + ", " + std::to_string(b));
  }
  return k;
}

// Trial extension of the factor by element e: solves L·w = σ⁻²·K_{S,e} by
// forward substitution and returns the squared pivot
// d = 1 + σ⁻²·K_ee − ‖w‖². Both gain and extend run exactly this code, so a
// committed extension reproduces the gain value bit for bit.
double trial_pivot(const KernelConfig& config, double inv_sigma_sq,
                   const CholeskyState& s, ElementId e,
                   std::vector<double>& w) {
  const std::size_t k = s.selected.size();
  w.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double rhs = inv_sigma_sq * kernel_entry(config, s.selected[i], e);
    const auto row = s.rowspan(i);
    const double partial =
        kernels::dot(row.first(i), std::span<const double>(w.data(), i));
    w[i] = (rhs - partial) / row[i];
  }
  const double wnorm =
      kernels::dot(std::span<const double>(w), std::span<const double>(w));
  const double d = 1.0 + inv_sigma_sq * kernel_entry(config, e, e) - wnorm;
  if (!(d > 0.0)) {
    throw std::runtime_error(
        "log-det pivot not positive (d = " + format_double(d) +
        " at element " + std::to_string(e) +
        ", |S| = " + std::to_string(k) + "); the kernel is not PSD");
  }
  return d;
}

}  // namespace

double LogDetOracle::gain_impl(const SolutionState& state, ElementId e) const {
  const auto& s = state_as<CholeskyState>(state);
  std::vector<double> w;
  const double d = trial_pivot(config_, inv_sigma_sq_, s, e, w);
  return 0.5 * std::log(d);
}

void LogDetOracle::extend_impl(SolutionState& state, ElementId e) const {
  auto& s = state_as<CholeskyState>(state);
  std::vector<double> w;
  const double d = trial_pivot(config_, inv_sigma_sq_, s, e, w);
  s.factor.insert(s.factor.end(), w.begin(), w.end());
  s.factor.push_back(std::sqrt(d));
  s.log_det_half += 0.5 * std::log(d);
  s.selected.push_back(e);
}

double logdet_reference(const KernelConfig& config,
                        const std::vector<ElementId>& selection) {
  config.validate();
  const std::size_t k = selection.size();
  if (k > 2000) {
    throw std::invalid_argument("selection too large for dense recompute");
  }
  for (const ElementId e : selection) {
    if (e >= config.points.size()) {
      throw std::out_of_range("element out of universe");
    }
  }
  const double inv_sigma_sq = 1.0 / (config.sigma * config.sigma);

  // Dense M = I + σ⁻²·K_{S,S}, then a textbook in-place Cholesky with plain
  // scalar loops. Deliberately shares no code with the incremental path.
  std::vector<double> m(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double v = inv_sigma_sq * kernel_entry(config, selection[i],
                                             selection[j]);
      if (i == j) v += 1.0;
      m[i * k + j] = v;
      m[j * k + i] = v;
    }
  }
  double log_det_half = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = m[i * k + j];
      for (std::size_t p = 0; p < j; ++p) sum -= m[i * k + p] * m[j * k + p];
      if (i == j) {
        if (!(sum > 0.0)) {
          throw std::runtime_error("dense factorization hit a non-positive "
                                   "pivot; the kernel is not PSD");
        }
        m[i * k + i] = std::sqrt(sum);
        log_det_half += std::log(m[i * k + i]);
      } else {
        m[i * k + j] = sum / m[j * k + j];
      }
    }
  }
  return log_det_half;
}

}  // namespace subcover
