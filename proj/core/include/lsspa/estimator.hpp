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

#ifndef LSSPA_ESTIMATOR_HPP_
#define LSSPA_ESTIMATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lsspa/chains.hpp"
#include "lsspa/dataset.hpp"
#include "lsspa/sampling.hpp"

namespace lsspa {

// Sample mean and biased (divide-by-count) covariance of one batch.
struct BatchStats {
  Vector mean;
  Matrix cov_biased;
  std::size_t count = 0;
};

BatchStats ComputeBatchStats(std::span<const LiftVector> lifts);

// Same, with one sample per row of `samples`.
BatchStats ComputeBatchStats(const Matrix& samples);

// Running Shapley estimate over equally sized batches. The mean and biased
// covariance after j batches equal the one-shot statistics of all j * B
// samples.
class AttributionEstimate {
 public:
  AttributionEstimate(std::size_t features, std::size_t samples_per_batch);

  // Folds in the next batch. Throws Error(kInvalidInput) when the batch size
  // or dimension differs from the configured one.
  void Merge(const BatchStats& batch);

  const Vector& s_hat() const { return s_hat_; }
  const Matrix& cov_biased() const { return cov_biased_; }
  std::size_t batches_done() const { return batches_done_; }
  std::size_t samples_per_batch() const { return samples_per_batch_; }
  std::size_t total_samples() const {
    return batches_done_ * samples_per_batch_;
  }

  // total / (total - 1) times the biased covariance. Throws
  // Error(kInsufficientSamples) with fewer than two samples.
  Matrix UnbiasedCovariance() const;

 private:
  Vector s_hat_;
  Matrix cov_biased_;
  std::size_t batches_done_ = 0;
  std::size_t samples_per_batch_;
};

struct RiskReport {
  Vector per_feature;   // q-quantile of |Delta_j|
  double overall = 0.0; // q-quantile of ||Delta||_2
  double quantile = 0.95;
  std::size_t draws = 0;
};

inline constexpr std::size_t kDefaultRiskDraws = 1000;

// CLT risk estimate: draws `draws` vectors from N(0, cov / total_samples)
// and reports empirical q-quantiles of the per-coordinate magnitudes and
// of the Euclidean norm. Negative eigenvalues of `cov` down to
// -1e-10 * max(1, lambda_max) are clipped to zero; anything more negative
// is an Error(kNumerical).
RiskReport EstimateRisk(const Matrix& cov_unbiased, std::size_t total_samples,
                        double q, std::size_t draws, Rng& rng);

// Linear interpolation between order statistics (the "type 7" rule).
double Quantile(std::vector<double> values, double q);

// Feature subsets for exhaustive enumeration: bit j set means feature j is
// present.
using SubsetMask = std::uint32_t;
using SubsetR2Oracle = std::function<double(SubsetMask)>;

inline constexpr std::size_t kMaxExactFeatures = 10;

// Exact Shapley values by averaging the lift vector over all p!
// orderings. The oracle is queried once per subset, including the empty
// one. Throws Error(kTooLarge) for p > kMaxExactFeatures.
Vector ExactShapley(const SubsetR2Oracle& r2, std::size_t p);

// Mean of L(perm) over an explicit list of permutations.
Vector MeanLifts(const ReducedData& train, const ReducedData& test,
                 std::span<const Permutation> perms);

// Every permutation of p features in lexicographic order.
std::vector<Permutation> AllPermutations(std::size_t p);

}  // namespace lsspa

#endif  // LSSPA_ESTIMATOR_HPP_
