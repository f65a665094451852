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

#ifndef LSSPA_REDUCTION_HPP_
#define LSSPA_REDUCTION_HPP_

#include <cstddef>
#include <span>

#include "lsspa/dataset.hpp"

namespace lsspa {

// Train-split means removed by Center(). The intercept of a model fitted on
// centered data is `label_mean - feature_means.dot(theta)`.
struct CenteringInfo {
  Vector feature_means;
  double label_mean = 0.0;

  double Intercept(const Vector& theta) const;
};

struct CenteredSplits {
  Dataset train;
  Dataset test;
  CenteringInfo info;
};

// Compressed form of one split: for every theta,
//   ||X theta - y||^2 == ||R theta - y_proj||^2 + residual_sq.
// R is p x p upper triangular with a nonnegative diagonal.
struct ReducedData {
  Matrix R;
  Vector y_proj;
  double residual_sq = 0.0;
  double label_sq_norm = 0.0;

  std::size_t features() const { return static_cast<std::size_t>(R.cols()); }
};

// Shifts both splits by the TRAIN column means and the TRAIN label mean.
CenteredSplits Center(const Dataset& train, const Dataset& test);

// Householder QR reduction. Throws RankDeficientError when a diagonal entry
// of R is below kRankTolerance times the largest one.
ReducedData QrReduce(const Dataset& data);

inline constexpr double kRankTolerance = 1e-10;
inline constexpr std::size_t kDefaultCholeskyBlockRows = 65536;

// Accumulates the Gram matrix of [X y] one row block at a time and factors
// it. Blocks are summed in the order they are added.
class GramAccumulator {
 public:
  explicit GramAccumulator(std::size_t features);

  void Add(const Matrix& X_block, const Vector& y_block);

  std::size_t rows_seen() const { return rows_seen_; }

  // Cholesky-factors the accumulated Gram matrix. Throws Error(kConditioning)
  // on a non-positive or negligible pivot.
  ReducedData Finish() const;

 private:
  std::size_t features_;
  std::size_t rows_seen_ = 0;
  Matrix gram_;      // X^T X
  Vector cross_;     // X^T y
  double label_sq_ = 0.0;
};

ReducedData CholeskyReduce(std::span<const Dataset> blocks);

// Splits `data` into row blocks of at most `block_rows` and reduces them.
ReducedData CholeskyReduce(const Dataset& data,
                           std::size_t block_rows = kDefaultCholeskyBlockRows);

// Stacks [X / sqrt(N); sqrt(lambda) I] and [y / sqrt(N); 0] so that ordinary
// least squares on the result is ridge regression with penalty lambda.
Dataset RidgeStack(const Dataset& data, double lambda);

// Full-model least-squares coefficients R^{-1} y_proj.
Vector SolveFullModel(const ReducedData& reduced);

}  // namespace lsspa

#endif  // LSSPA_REDUCTION_HPP_
