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

#ifndef LSSPA_PIPELINE_HPP_
#define LSSPA_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lsspa/chains.hpp"
#include "lsspa/dataset.hpp"
#include "lsspa/estimator.hpp"
#include "lsspa/reduction.hpp"
#include "lsspa/sampling.hpp"

namespace lsspa {

enum class ReductionPath { kQr, kCholesky };

std::string_view ReductionPathName(ReductionPath path);
std::optional<ReductionPath> ParseReductionPath(std::string_view name);

struct RunConfig {
  std::size_t max_permutations = std::size_t{1} << 13;  // K
  std::size_t batch_size = std::size_t{1} << 8;         // B
  double tolerance = 1e-2;                              // stop when sigma < tol
  double quantile = 0.95;
  std::size_t risk_draws = kDefaultRiskDraws;
  // `sampler.dimension` is overwritten with the feature count.
  SamplerConfig sampler;
  std::optional<double> ridge_lambda;
  bool center = true;
  ReductionPath reduction_path = ReductionPath::kQr;
  std::size_t cholesky_block_rows = kDefaultCholeskyBlockRows;
  // Seeds the risk-estimate draws. The permutation stream uses
  // sampler.seed.
  std::uint64_t seed = 0;
};

// Throws Error(kInvalidConfig) (or kInvalidInput for a bad lambda).
void ValidateRunConfig(const RunConfig& config);

struct HistoryEntry {
  std::size_t batch_index = 0;  // one-based
  std::size_t samples = 0;      // lift samples merged so far
  double sigma_hat = 0.0;
  Vector s_hat;
};

struct AttributionResult {
  Vector shapley;
  Vector per_feature_error;
  double overall_error = 0.0;
  double r2_full = 0.0;
  bool converged = false;
  // Set when all K / B batches ran without reaching the tolerance.
  bool tolerance_warning = false;
  std::size_t batches_used = 0;
  std::size_t total_lift_vectors = 0;
  std::vector<HistoryEntry> history;
  std::optional<double> intercept;
};

// Both splits after optional centering and ridge stacking, reduced to
// triangular form.
struct PreparedProblem {
  ReducedData train;
  ReducedData test;
  std::optional<CenteringInfo> centering;
};

PreparedProblem Prepare(const Dataset& train, const Dataset& test,
                        const RunConfig& config);

// Batched estimation with risk-based early stopping on already-reduced
// data.
AttributionResult AttributePrepared(const PreparedProblem& problem,
                                    const RunConfig& config);

AttributionResult Attribute(const Dataset& train, const Dataset& test,
                            const RunConfig& config);

// Out-of-sample R^2 of the full model.
double R2Full(const ReducedData& train, const ReducedData& test);
double R2Full(const Dataset& train, const Dataset& test,
              const RunConfig& config);

struct RidgeSelection {
  double lambda = 0.0;
  double r2 = 0.0;
  std::vector<double> r2_per_candidate;
};

// Picks the candidate penalty with the best full-model test R^2. Ties go
// to the earlier candidate.
RidgeSelection SelectRidgeLambda(const Dataset& train, const Dataset& test,
                                 std::span<const double> candidates,
                                 const RunConfig& config);

}  // namespace lsspa

#endif  // LSSPA_PIPELINE_HPP_
