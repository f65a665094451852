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

#include "lsspa/synthdata.hpp"

#include <cmath>
#include <random>

#include "lsspa/error.hpp"
#include "lsspa/reduction.hpp"

namespace lsspa {
namespace {

Matrix StandardNormal(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  // Row-major draw order so a prefix of rows does not depend on `rows`.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = normal(rng);
  }
  return out;
}

Matrix SampleRows(Eigen::Index rows, const Matrix& chol_lower, Rng& rng) {
  return StandardNormal(rows, chol_lower.rows(), rng) *
         chol_lower.transpose();
}

Vector Noise(Eigen::Index rows, double stddev, Rng& rng) {
  return StandardNormal(rows, 1, rng).col(0) * stddev;
}

}  // namespace

Matrix GenerateCorrelation(std::size_t p, std::size_t factors, Rng& rng) {
  if (p == 0) {
    Fail(ErrorKind::kInvalidInput, "correlation matrix needs p >= 1");
  }
  const auto dim = static_cast<Eigen::Index>(p);
  Matrix sigma = Matrix::Identity(dim, dim);
  if (factors > 0) {
    const Matrix F = StandardNormal(dim, static_cast<Eigen::Index>(factors), rng);
    sigma.noalias() += F * F.transpose();
  }
  const Vector inv_sd = sigma.diagonal().cwiseSqrt().cwiseInverse();
  Matrix corr = inv_sd.asDiagonal() * sigma * inv_sd.asDiagonal();
  corr.diagonal().setOnes();
  return corr;
}

SyntheticProblem GenerateDataset(const SynthSpec& spec) {
  if (spec.p == 0 || spec.n_train < spec.p || spec.n_test < spec.p) {
    Fail(ErrorKind::kInvalidInput,
         "synthetic spec needs p >= 1 and at least p rows per split");
  }
  Rng rng(spec.seed);
  const auto p = static_cast<Eigen::Index>(spec.p);

  SyntheticProblem out;
  out.correlation = GenerateCorrelation(
      spec.p, spec.factor_count.value_or(DefaultFactorCount(spec.p)), rng);

  out.theta_true = Vector::Zero(p);
  const std::size_t active = (spec.p + 1) / 10;
  const Permutation positions = UniformPermutation(rng, spec.p);
  for (std::size_t i = 0; i < active; ++i) {
    out.theta_true(static_cast<Eigen::Index>(positions[i])) = 2.0;
  }

  const Eigen::LLT<Matrix> llt(out.correlation);
  if (llt.info() != Eigen::Success) {
    Fail(ErrorKind::kNumerical, "generated correlation is not positive definite");
  }
  const Matrix L = llt.matrixL();
  const double noise_sd =
      std::sqrt(1.5 * static_cast<double>(spec.p * spec.p));

  Dataset train;
  Dataset test;
  train.X = SampleRows(static_cast<Eigen::Index>(spec.n_train), L, rng);
  test.X = SampleRows(static_cast<Eigen::Index>(spec.n_test), L, rng);
  train.y = train.X * out.theta_true +
            Noise(static_cast<Eigen::Index>(spec.n_train), noise_sd, rng);
  test.y = test.X * out.theta_true +
           Noise(static_cast<Eigen::Index>(spec.n_test), noise_sd, rng);

  CenteredSplits centered = Center(train, test);
  out.train = std::move(centered.train);
  out.test = std::move(centered.test);
  return out;
}

SyntheticProblem GenerateToy(std::uint64_t seed) {
  constexpr Eigen::Index kRows = 50;
  Rng rng(seed);

  SyntheticProblem out;
  out.correlation.resize(3, 3);
  out.correlation << 1.0, 0.7, -0.4,
                     0.7, 1.0, -0.5,
                     -0.4, -0.5, 1.0;
  out.theta_true.resize(3);
  out.theta_true << 2.1, 1.4, 0.1;

  const Matrix L = Eigen::LLT<Matrix>(out.correlation).matrixL();
  out.train.X = SampleRows(kRows, L, rng);
  out.test.X = SampleRows(kRows, L, rng);
  out.train.y = out.train.X * out.theta_true + Noise(kRows, 1.0, rng);
  out.test.y = out.test.X * out.theta_true + Noise(kRows, 1.0, rng);
  return out;
}

}  // namespace lsspa
