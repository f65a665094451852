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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lsspa/error.hpp"
#include "lsspa/estimator.hpp"
#include "lsspa/synthdata.hpp"
#include "support/oracles.hpp"

namespace lsspa {
namespace {

using ::lsspa::testing::DirectR2;
using ::lsspa::testing::NaiveLifts;
using ::lsspa::testing::NormalEquationsFit;
using ::lsspa::testing::NormalEquationsOracle;
using ::lsspa::testing::RandomDataset;
using ::lsspa::testing::RandomMatrix;

RunConfig SmallConfig(std::size_t K, std::size_t B) {
  RunConfig config;
  config.max_permutations = K;
  config.batch_size = B;
  config.risk_draws = 200;
  config.center = false;
  return config;
}

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no lsspa::Error thrown";
  return ErrorKind::kNumerical;
}

TEST(PipelineTest, EnumerationMatchesExactShapley) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Dataset train = RandomDataset(80, 4, seed);
    const Dataset test = RandomDataset(60, 4, seed + 100);
    const PreparedProblem prob = Prepare(train, test, SmallConfig(8, 8));
    const auto perms = AllPermutations(4);
    const Vector mean = MeanLifts(prob.train, prob.test, perms);
    const Vector exact = ExactShapley(NormalEquationsOracle(train, test), 4);
    EXPECT_LT((mean - exact).cwiseAbs().maxCoeff(), 1e-12) << "seed " << seed;
  }
}

TEST(PipelineTest, MonteCarloEstimateWithinNoiseOfExact) {
  const SyntheticProblem toy = GenerateToy(2);
  RunConfig config = SmallConfig(4096, 256);
  config.sampler.kind = SamplerKind::kMonteCarlo;
  config.sampler.seed = 9;
  config.tolerance = 1e-12;  // run every batch
  const AttributionResult result = Attribute(toy.train, toy.test, config);
  const Vector exact =
      ExactShapley(NormalEquationsOracle(toy.train, toy.test), 3);
  // The reported 95% error bound is a generous yardstick; use 3x of it.
  for (Eigen::Index j = 0; j < 3; ++j) {
    EXPECT_LT(std::abs(result.shapley(j) - exact(j)),
              3.0 * result.per_feature_error(j) + 1e-12);
  }
  EXPECT_LT((result.shapley - exact).norm(), 0.02);
}

TEST(PipelineTest, OrthogonalDesignConvergesAfterOneBatch) {
  const Matrix basis = RandomMatrix(100, 5, 8).householderQr().householderQ() *
                       Matrix::Identity(100, 5);
  Dataset train{basis, RandomMatrix(100, 1, 9).col(0)};
  Dataset test{basis, RandomMatrix(100, 1, 10).col(0)};
  RunConfig config = SmallConfig(64, 16);
  config.tolerance = 1e-9;
  config.sampler.kind = SamplerKind::kMonteCarlo;
  const AttributionResult result = Attribute(train, test, config);
  ASSERT_FALSE(result.history.empty());
  EXPECT_LE(result.history.front().sigma_hat, 1e-10);
  EXPECT_TRUE(result.converged);
  EXPECT_EQ(result.batches_used, 1u);
  const PreparedProblem prob = Prepare(train, test, config);
  const LiftVector one =
      ComputeLifts(prob.train, prob.test, Permutation::Identity(5));
  EXPECT_LT((result.shapley - one.lifts).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PipelineTest, EfficiencyHoldsAfterEveryBatch) {
  const Dataset train = RandomDataset(200, 8, 3);
  const Dataset test = RandomDataset(150, 8, 4);
  for (bool antithetical : {false, true}) {
    RunConfig config = SmallConfig(256, 32);
    config.center = true;
    config.tolerance = 1e-12;
    config.sampler.antithetical = antithetical;
    const AttributionResult result = Attribute(train, test, config);
    ASSERT_EQ(result.history.size(), 8u);
    for (const HistoryEntry& h : result.history) {
      EXPECT_NEAR(h.s_hat.sum(), result.r2_full, 1e-8);
    }
    EXPECT_NEAR(result.shapley.sum(), result.r2_full, 1e-8);
  }
}

TEST(PipelineTest, HistoryRecordsEveryBatch) {
  const Dataset train = RandomDataset(120, 6, 13);
  const Dataset test = RandomDataset(90, 6, 14);
  RunConfig config = SmallConfig(128, 16);
  config.tolerance = 1e-14;
  const AttributionResult result = Attribute(train, test, config);
  EXPECT_FALSE(result.converged);
  EXPECT_TRUE(result.tolerance_warning);
  EXPECT_EQ(result.batches_used, 8u);
  EXPECT_EQ(result.total_lift_vectors, 128u);
  ASSERT_EQ(result.history.size(), 8u);
  for (std::size_t i = 0; i < result.history.size(); ++i) {
    EXPECT_EQ(result.history[i].batch_index, i + 1);
    EXPECT_EQ(result.history[i].samples, 16 * (i + 1));
  }
  EXPECT_EQ(result.overall_error, result.history.back().sigma_hat);
}

TEST(PipelineTest, ConvergedImpliesBelowTolerance) {
  SynthSpec spec;
  spec.p = 20;
  spec.n_train = 2000;
  spec.n_test = 2000;
  spec.seed = 1;
  const SyntheticProblem prob = GenerateDataset(spec);
  RunConfig config;
  config.center = false;  // already centered by the generator
  config.tolerance = 1e-3;
  config.sampler.kind = SamplerKind::kMonteCarlo;
  config.sampler.antithetical = true;
  const AttributionResult result = Attribute(prob.train, prob.test, config);
  ASSERT_TRUE(result.converged);
  EXPECT_LT(result.overall_error, config.tolerance);
  EXPECT_FALSE(result.tolerance_warning);

  // Ground truth from a long antithetical run on the same reduction.
  RunConfig truth_config = config;
  truth_config.max_permutations = 1 << 15;
  truth_config.batch_size = 1 << 15;
  truth_config.tolerance = 1e-300;
  truth_config.sampler.seed = 12345;
  const AttributionResult truth =
      Attribute(prob.train, prob.test, truth_config);
  EXPECT_LT((result.shapley - truth.shapley).norm(), 5e-3);
}

TEST(PipelineTest, DeterministicForFixedSeeds) {
  const Dataset train = RandomDataset(150, 7, 21);
  const Dataset test = RandomDataset(100, 7, 22);
  for (SamplerKind kind : {SamplerKind::kMonteCarlo, SamplerKind::kArgsortQmc}) {
    RunConfig config = SmallConfig(256, 64);
    config.tolerance = 1e-14;
    config.sampler.kind = kind;
    config.sampler.seed = 5;
    config.seed = 6;
    const AttributionResult a = Attribute(train, test, config);
    const AttributionResult b = Attribute(train, test, config);
    EXPECT_EQ(a.shapley, b.shapley);
    EXPECT_EQ(a.per_feature_error, b.per_feature_error);
    EXPECT_EQ(a.overall_error, b.overall_error);
    ASSERT_EQ(a.history.size(), b.history.size());
    for (std::size_t i = 0; i < a.history.size(); ++i) {
      EXPECT_EQ(a.history[i].sigma_hat, b.history[i].sigma_hat);
      EXPECT_EQ(a.history[i].s_hat, b.history[i].s_hat);
    }
  }
}

TEST(PipelineTest, RidgeMatchesPreStackedData) {
  const Dataset train = RandomDataset(120, 6, 31);
  const Dataset test = RandomDataset(80, 6, 32);
  const double lambda = 0.7;
  RunConfig config = SmallConfig(64, 16);
  config.center = true;
  config.tolerance = 1e-14;
  config.ridge_lambda = lambda;
  const AttributionResult ridge = Attribute(train, test, config);

  // Center by hand, scale the data rows by 1/sqrt(N) so the objective is
  // the mean squared error, then append sqrt(lambda) I rows with zero labels.
  const Eigen::RowVectorXd mx = train.X.colwise().mean();
  const double my = train.y.mean();
  const double scale = 1.0 / std::sqrt(120.0);
  Dataset stacked;
  stacked.X.resize(120 + 6, 6);
  stacked.X.topRows(120) = (train.X.rowwise() - mx) * scale;
  stacked.X.bottomRows(6) = std::sqrt(lambda) * Matrix::Identity(6, 6);
  stacked.y.resize(126);
  stacked.y.head(120) = (train.y.array() - my) * scale;
  stacked.y.tail(6).setZero();
  Dataset shifted{test.X.rowwise() - mx, test.y.array() - my};

  RunConfig plain = config;
  plain.ridge_lambda.reset();
  plain.center = false;
  const AttributionResult ref = Attribute(stacked, shifted, plain);
  EXPECT_LT((ridge.shapley - ref.shapley).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(ridge.r2_full, ref.r2_full, 1e-10);
}

TEST(PipelineTest, RidgeRejectsNonPositiveLambda) {
  const Dataset d = RandomDataset(30, 3, 1);
  RunConfig config = SmallConfig(8, 8);
  for (double bad : {0.0, -1.0}) {
    config.ridge_lambda = bad;
    EXPECT_EQ(KindOf([&] { Attribute(d, d, config); }),
              ErrorKind::kInvalidInput);
  }
}

TEST(PipelineTest, CholeskyPathAgreesWithQr) {
  const Dataset train = RandomDataset(500, 8, 41);
  const Dataset test = RandomDataset(300, 8, 42);
  RunConfig config = SmallConfig(128, 32);
  config.center = true;
  config.tolerance = 1e-14;
  const AttributionResult qr = Attribute(train, test, config);
  config.reduction_path = ReductionPath::kCholesky;
  config.cholesky_block_rows = 64;
  const AttributionResult chol = Attribute(train, test, config);
  EXPECT_LT((qr.shapley - chol.shapley).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NEAR(qr.r2_full, chol.r2_full, 1e-8);
}

TEST(PipelineTest, InterceptReportedWhenCentered) {
  Dataset train = RandomDataset(100, 3, 51);
  train.y.array() += 4.0;
  const Dataset test = RandomDataset(50, 3, 52);
  RunConfig config = SmallConfig(8, 8);
  config.center = true;
  const AttributionResult centered = Attribute(train, test, config);
  ASSERT_TRUE(centered.intercept.has_value());

  // Oracle: least squares with an explicit ones column.
  Dataset augmented{Matrix(100, 4), train.y};
  augmented.X << train.X, Vector::Ones(100);
  const Vector fit = NormalEquationsFit(augmented, {0, 1, 2, 3});
  EXPECT_NEAR(*centered.intercept, fit(3), 1e-9);

  config.center = false;
  EXPECT_FALSE(Attribute(train, test, config).intercept.has_value());
}

TEST(PipelineTest, InvalidConfigurations) {
  const Dataset d = RandomDataset(30, 3, 1);
  RunConfig config = SmallConfig(100, 30);
  EXPECT_EQ(KindOf([&] { Attribute(d, d, config); }),
            ErrorKind::kInvalidConfig);
  config = SmallConfig(8, 16);
  EXPECT_EQ(KindOf([&] { Attribute(d, d, config); }),
            ErrorKind::kInvalidConfig);
  config = SmallConfig(8, 8);
  config.quantile = 1.0;
  EXPECT_EQ(KindOf([&] { Attribute(d, d, config); }),
            ErrorKind::kInvalidConfig);
  config = SmallConfig(8, 8);
  config.tolerance = 0.0;
  EXPECT_EQ(KindOf([&] { Attribute(d, d, config); }),
            ErrorKind::kInvalidConfig);
  const Dataset other = RandomDataset(30, 4, 2);
  EXPECT_EQ(KindOf([&] { Attribute(d, other, SmallConfig(8, 8)); }),
            ErrorKind::kInvalidInput);
}

TEST(PipelineTest, ZeroTestLabelsAreUndefined) {
  const Dataset train = RandomDataset(30, 3, 1);
  Dataset test = RandomDataset(20, 3, 2);
  test.y.setZero();
  EXPECT_EQ(KindOf([&] { Attribute(train, test, SmallConfig(8, 8)); }),
            ErrorKind::kUndefinedMetric);
}

TEST(R2FullTest, PerfectPredictionIsOne) {
  const Matrix X = RandomMatrix(50, 4, 3);
  const Vector theta = RandomMatrix(4, 1, 4).col(0);
  const Matrix Xt = RandomMatrix(40, 4, 5);
  const Dataset train{X, X * theta};
  const Dataset test{Xt, Xt * theta};
  EXPECT_NEAR(R2Full(train, test, SmallConfig(8, 8)), 1.0, 1e-12);
}

TEST(R2FullTest, OrthogonalLabelsGiveZero) {
  const Matrix basis = RandomMatrix(60, 4, 6).householderQr().householderQ() *
                       Matrix::Identity(60, 5);
  const Dataset train{basis.leftCols(4), basis.col(4)};
  const Dataset test{RandomMatrix(30, 4, 7), RandomMatrix(30, 1, 8).col(0)};
  EXPECT_NEAR(R2Full(train, test, SmallConfig(8, 8)), 0.0, 1e-12);
}

TEST(R2FullTest, MatchesUnreducedComputation) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SyntheticProblem toy = GenerateToy(seed);
    const Vector theta = NormalEquationsFit(toy.train, {0, 1, 2});
    EXPECT_NEAR(R2Full(toy.train, toy.test, SmallConfig(8, 8)),
                DirectR2(toy.test, theta), 1e-10);
  }
}

TEST(SelectRidgeLambdaTest, PicksBestCandidate) {
  const Dataset train = RandomDataset(40, 10, 61, 3.0);
  const Dataset test = RandomDataset(200, 10, 62, 3.0);
  const std::vector<double> candidates = {1e-3, 1e-1, 1.0, 10.0, 100.0};
  RunConfig config = SmallConfig(8, 8);
  const RidgeSelection sel =
      SelectRidgeLambda(train, test, candidates, config);
  ASSERT_EQ(sel.r2_per_candidate.size(), candidates.size());
  const auto best = std::max_element(sel.r2_per_candidate.begin(),
                                     sel.r2_per_candidate.end());
  EXPECT_EQ(sel.r2, *best);
  EXPECT_EQ(sel.lambda, candidates[static_cast<std::size_t>(
                            best - sel.r2_per_candidate.begin())]);
  EXPECT_EQ(KindOf([&] {
              SelectRidgeLambda(train, test, std::vector<double>{}, config);
            }),
            ErrorKind::kInvalidInput);
}

double SecondsPerLift(Eigen::Index rows, std::uint64_t seed) {
  const Dataset train = RandomDataset(rows, 50, seed);
  const Dataset test = RandomDataset(rows, 50, seed + 1);
  RunConfig config = SmallConfig(32, 32);
  config.tolerance = 1e-14;
  const PreparedProblem prob = Prepare(train, test, config);
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    AttributePrepared(prob, config);
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count() / 32.0);
  }
  return best;
}

TEST(PipelineScalingTest, PerLiftTimeIndependentOfRowCount) {
  const double small = SecondsPerLift(1000, 71);
  const double large = SecondsPerLift(100000, 73);
  const double ratio = std::max(small, large) / std::min(small, large);
  EXPECT_LT(ratio, 2.0) << "small " << small << " large " << large;
}

}  // namespace
}  // namespace lsspa
