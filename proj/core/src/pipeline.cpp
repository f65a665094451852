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

#include "lsspa/pipeline.hpp"

#include <limits>
#include <string>
#include <utility>

#include "lsspa/error.hpp"

namespace lsspa {
namespace {

ReducedData Reduce(const Dataset& data, const RunConfig& config) {
  if (config.reduction_path == ReductionPath::kCholesky) {
    return CholeskyReduce(data, config.cholesky_block_rows);
  }
  return QrReduce(data);
}

// Seed stream for the risk draws, decorrelated from the sampler seed even
// when the two seeds are equal.
Rng MakeRiskRng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x5249534bu};
  return Rng(seq);
}

}  // namespace

std::string_view ReductionPathName(ReductionPath path) {
  return path == ReductionPath::kCholesky ? "cholesky" : "qr";
}

std::optional<ReductionPath> ParseReductionPath(std::string_view name) {
  if (name == "qr") return ReductionPath::kQr;
  if (name == "cholesky") return ReductionPath::kCholesky;
  return std::nullopt;
}

void ValidateRunConfig(const RunConfig& config) {
  if (config.max_permutations == 0 || config.batch_size == 0) {
    Fail(ErrorKind::kInvalidConfig,
         "max permutations and batch size must be positive");
  }
  if (config.batch_size > config.max_permutations) {
    Fail(ErrorKind::kInvalidConfig,
         "batch size must not exceed max permutations");
  }
  if (config.max_permutations % config.batch_size != 0) {
    Fail(ErrorKind::kInvalidConfig,
         "max permutations (" + std::to_string(config.max_permutations) +
             ") must be divisible by batch size (" +
             std::to_string(config.batch_size) + ")");
  }
  if (!(config.tolerance > 0.0)) {
    Fail(ErrorKind::kInvalidConfig, "tolerance must be positive");
  }
  if (!(config.quantile > 0.0 && config.quantile < 1.0)) {
    Fail(ErrorKind::kInvalidConfig, "quantile must lie in (0, 1)");
  }
  if (config.risk_draws == 0) {
    Fail(ErrorKind::kInvalidConfig, "risk draws must be positive");
  }
  if (config.ridge_lambda && !(*config.ridge_lambda > 0.0)) {
    Fail(ErrorKind::kInvalidInput, "lambda must be positive");
  }
  if (config.cholesky_block_rows == 0) {
    Fail(ErrorKind::kInvalidConfig, "Cholesky block size must be positive");
  }
}

PreparedProblem Prepare(const Dataset& train, const Dataset& test,
                        const RunConfig& config) {
  ValidateRunConfig(config);
  ValidateDataset(train, "train");
  ValidateDataset(test, "test");
  if (train.features() != test.features()) {
    Fail(ErrorKind::kInvalidInput,
         "train and test have different feature counts");
  }

  PreparedProblem out;
  Dataset fit = train;
  Dataset eval = test;
  if (config.center) {
    CenteredSplits centered = Center(train, test);
    fit = std::move(centered.train);
    eval = std::move(centered.test);
    out.centering = std::move(centered.info);
  }
  if (config.ridge_lambda) {
    fit = RidgeStack(fit, *config.ridge_lambda);
  }
  out.train = Reduce(fit, config);
  out.test = Reduce(eval, config);
  return out;
}

double R2Full(const ReducedData& train, const ReducedData& test) {
  if (!(test.label_sq_norm > 0.0)) {
    Fail(ErrorKind::kUndefinedMetric,
         "R^2 is undefined: test labels have zero norm");
  }
  const Vector theta = SolveFullModel(train);
  const double err =
      (test.R * theta - test.y_proj).squaredNorm() + test.residual_sq;
  return (test.label_sq_norm - err) / test.label_sq_norm;
}

double R2Full(const Dataset& train, const Dataset& test,
              const RunConfig& config) {
  const PreparedProblem problem = Prepare(train, test, config);
  return R2Full(problem.train, problem.test);
}

AttributionResult AttributePrepared(const PreparedProblem& problem,
                                    const RunConfig& config) {
  ValidateRunConfig(config);
  const std::size_t p = problem.train.features();
  if (problem.test.features() != p) {
    Fail(ErrorKind::kInvalidInput, "train and test reductions disagree on p");
  }

  SamplerConfig sampler = config.sampler;
  sampler.dimension = p;
  PermutationStream stream(sampler);
  Rng risk_rng = MakeRiskRng(config.seed);

  const std::size_t batch_count = config.max_permutations / config.batch_size;
  AttributionEstimate estimate(p, config.batch_size);
  AttributionResult result;
  result.r2_full = R2Full(problem.train, problem.test);
  result.history.reserve(batch_count);

  std::vector<LiftVector> lifts(config.batch_size);
  RiskReport risk;
  for (std::size_t j = 1; j <= batch_count; ++j) {
    // Permutations are drawn lazily; the stream order is the same as
    // generating all K up front.
    for (auto& lift : lifts) {
      const Permutation perm = stream.Next();
      lift = sampler.antithetical
                 ? ComputeAntitheticLifts(problem.train, problem.test, perm)
                 : ComputeLifts(problem.train, problem.test, perm);
    }
    estimate.Merge(ComputeBatchStats(lifts));

    if (estimate.total_samples() >= 2) {
      risk = EstimateRisk(estimate.UnbiasedCovariance(),
                          estimate.total_samples(), config.quantile,
                          config.risk_draws, risk_rng);
    } else {
      risk.per_feature =
          Vector::Constant(static_cast<Eigen::Index>(p),
                           std::numeric_limits<double>::infinity());
      risk.overall = std::numeric_limits<double>::infinity();
    }
    result.history.push_back(
        {j, estimate.total_samples(), risk.overall, estimate.s_hat()});

    if (risk.overall < config.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.tolerance_warning = !result.converged;
  result.shapley = estimate.s_hat();
  result.per_feature_error = risk.per_feature;
  result.overall_error = risk.overall;
  result.batches_used = estimate.batches_done();
  result.total_lift_vectors = estimate.total_samples();
  if (problem.centering) {
    result.intercept =
        problem.centering->Intercept(SolveFullModel(problem.train));
  }
  return result;
}

AttributionResult Attribute(const Dataset& train, const Dataset& test,
                            const RunConfig& config) {
  return AttributePrepared(Prepare(train, test, config), config);
}

RidgeSelection SelectRidgeLambda(const Dataset& train, const Dataset& test,
                                 std::span<const double> candidates,
                                 const RunConfig& config) {
  if (candidates.empty()) {
    Fail(ErrorKind::kInvalidInput, "no candidate penalties given");
  }
  RidgeSelection out;
  out.r2 = -std::numeric_limits<double>::infinity();
  RunConfig trial = config;
  for (double lambda : candidates) {
    trial.ridge_lambda = lambda;
    const double r2 = R2Full(train, test, trial);
    out.r2_per_candidate.push_back(r2);
    if (r2 > out.r2) {
      out.r2 = r2;
      out.lambda = lambda;
    }
  }
  return out;
}

}  // namespace lsspa
