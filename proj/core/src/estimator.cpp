/*
 * Copyright 2026 The lsspa Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lsspa/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lsspa/error.hpp"

namespace lsspa {

BatchStats ComputeBatchStats(const Matrix& samples) {
  if (samples.rows() == 0) {
    Fail(ErrorKind::kInvalidInput, "batch statistics need at least one sample");
  }
  const double n = static_cast<double>(samples.rows());
  BatchStats out;
  out.count = static_cast<std::size_t>(samples.rows());
  out.mean = samples.colwise().mean().transpose();
  const Matrix centered = samples.rowwise() - out.mean.transpose();
  out.cov_biased = (centered.transpose() * centered) / n;
  return out;
}

BatchStats ComputeBatchStats(std::span<const LiftVector> lifts) {
  if (lifts.empty()) {
    Fail(ErrorKind::kInvalidInput, "batch statistics need at least one sample");
  }
  const Eigen::Index p = lifts.front().lifts.size();
  Matrix samples(static_cast<Eigen::Index>(lifts.size()), p);
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    if (lifts[i].lifts.size() != p) {
      Fail(ErrorKind::kInvalidInput, "lift vectors have different lengths");
    }
    samples.row(static_cast<Eigen::Index>(i)) = lifts[i].lifts.transpose();
  }
  return ComputeBatchStats(samples);
}

AttributionEstimate::AttributionEstimate(std::size_t features,
                                         std::size_t samples_per_batch)
    : s_hat_(Vector::Zero(static_cast<Eigen::Index>(features))),
      cov_biased_(Matrix::Zero(static_cast<Eigen::Index>(features),
                               static_cast<Eigen::Index>(features))),
      samples_per_batch_(samples_per_batch) {
  if (samples_per_batch == 0) {
    Fail(ErrorKind::kInvalidInput, "batch size must be positive");
  }
}

void AttributionEstimate::Merge(const BatchStats& batch) {
  if (batch.count != samples_per_batch_) {
    Fail(ErrorKind::kInvalidInput,
         "batch has " + std::to_string(batch.count) + " samples, expected " +
             std::to_string(samples_per_batch_));
  }
  if (batch.mean.size() != s_hat_.size() ||
      batch.cov_biased.rows() != cov_biased_.rows() ||
      batch.cov_biased.cols() != cov_biased_.cols()) {
    Fail(ErrorKind::kInvalidInput, "batch dimension does not match estimate");
  }

  const double j = static_cast<double>(batches_done_ + 1);
  const Vector shift = s_hat_ - batch.mean;
  s_hat_ = ((j - 1.0) / j) * s_hat_ + (1.0 / j) * batch.mean;
  cov_biased_ = ((j - 1.0) / j) * cov_biased_ + (1.0 / j) * batch.cov_biased +
                ((j - 1.0) / (j * j)) * (shift * shift.transpose());
  ++batches_done_;
}

Matrix AttributionEstimate::UnbiasedCovariance() const {
  const std::size_t n = total_samples();
  if (n < 2) {
    Fail(ErrorKind::kInsufficientSamples,
         "unbiased covariance needs at least two samples, have " +
             std::to_string(n));
  }
  const double total = static_cast<double>(n);
  return (total / (total - 1.0)) * cov_biased_;
}

double Quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    Fail(ErrorKind::kInvalidInput, "quantile of an empty sample");
  }
  std::sort(values.begin(), values.end());
  const double position = q * static_cast<double>(values.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(position));
  const std::size_t upper = std::min(lower + 1, values.size() - 1);
  const double frac = position - static_cast<double>(lower);
  return values[lower] + frac * (values[upper] - values[lower]);
}

RiskReport EstimateRisk(const Matrix& cov_unbiased, std::size_t total_samples,
                        double q, std::size_t draws, Rng& rng) {
  if (!(q > 0.0 && q < 1.0)) {
    Fail(ErrorKind::kInvalidInput, "quantile must lie in (0, 1)");
  }
  if (draws == 0) {
    Fail(ErrorKind::kInvalidInput, "risk estimate needs at least one draw");
  }
  if (total_samples < 2) {
    Fail(ErrorKind::kInsufficientSamples,
         "risk estimate needs at least two samples");
  }
  const Eigen::Index p = cov_unbiased.rows();
  if (cov_unbiased.cols() != p || p == 0) {
    Fail(ErrorKind::kInvalidInput, "covariance must be square and nonempty");
  }

  // Symmetric square root with clipped eigenvalues; Cholesky would reject
  // the semidefinite covariances that arise in practice.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(
      0.5 * (cov_unbiased + cov_unbiased.transpose()));
  if (eig.info() != Eigen::Success) {
    Fail(ErrorKind::kNumerical, "eigendecomposition of covariance failed");
  }
  const Vector& values = eig.eigenvalues();
  const double largest = values.maxCoeff();
  if (values.minCoeff() < -1e-10 * std::max(1.0, largest)) {
    Fail(ErrorKind::kNumerical, "lift covariance is indefinite");
  }
  const double inv_k = 1.0 / static_cast<double>(total_samples);
  const Vector scales = (values.cwiseMax(0.0) * inv_k).cwiseSqrt();
  const Matrix factor = eig.eigenvectors() * scales.asDiagonal();

  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> magnitudes(static_cast<std::size_t>(p));
  for (auto& m : magnitudes) m.reserve(draws);
  std::vector<double> norms;
  norms.reserve(draws);

  Vector z(p);
  Vector delta(p);
  for (std::size_t i = 0; i < draws; ++i) {
    for (Eigen::Index c = 0; c < p; ++c) z(c) = normal(rng);
    delta.noalias() = factor * z;
    for (Eigen::Index c = 0; c < p; ++c) {
      magnitudes[static_cast<std::size_t>(c)].push_back(std::abs(delta(c)));
    }
    norms.push_back(delta.norm());
  }

  RiskReport out;
  out.quantile = q;
  out.draws = draws;
  out.per_feature.resize(p);
  for (Eigen::Index c = 0; c < p; ++c) {
    out.per_feature(c) =
        Quantile(std::move(magnitudes[static_cast<std::size_t>(c)]), q);
  }
  out.overall = Quantile(std::move(norms), q);
  return out;
}

Vector ExactShapley(const SubsetR2Oracle& r2, std::size_t p) {
  if (p == 0) {
    Fail(ErrorKind::kInvalidInput, "exact Shapley values need p >= 1");
  }
  if (p > kMaxExactFeatures) {
    Fail(ErrorKind::kTooLarge,
         "exact Shapley enumeration visits p! orderings; p = " +
             std::to_string(p) + " exceeds the limit of " +
             std::to_string(kMaxExactFeatures));
  }
  const std::size_t subsets = std::size_t{1} << p;
  std::vector<double> table(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    table[mask] = r2(static_cast<SubsetMask>(mask));
  }

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Vector total = Vector::Zero(static_cast<Eigen::Index>(p));
  std::size_t count = 0;
  do {
    SubsetMask mask = 0;
    for (std::size_t feature : order) {
      const SubsetMask next = mask | (SubsetMask{1} << feature);
      total(static_cast<Eigen::Index>(feature)) += table[next] - table[mask];
      mask = next;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return total / static_cast<double>(count);
}

Vector MeanLifts(const ReducedData& train, const ReducedData& test,
                 std::span<const Permutation> perms) {
  if (perms.empty()) {
    Fail(ErrorKind::kInvalidInput, "no permutations to average over");
  }
  Vector total = Vector::Zero(static_cast<Eigen::Index>(train.features()));
  for (const Permutation& perm : perms) {
    total += ComputeLifts(train, test, perm).lifts;
  }
  return total / static_cast<double>(perms.size());
}

std::vector<Permutation> AllPermutations(std::size_t p) {
  if (p > kMaxExactFeatures) {
    Fail(ErrorKind::kTooLarge, "refusing to enumerate more than 10! orderings");
  }
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace lsspa
