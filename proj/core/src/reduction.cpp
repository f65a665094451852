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

#include "lsspa/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsspa/error.hpp"

namespace lsspa {
namespace {

// A Cholesky pivot is rejected when it drops below this fraction of the
// corresponding Gram diagonal entry. Rounding alone leaves pivots near
// machine epsilon for exactly dependent columns.
constexpr double kCholeskyPivotTolerance = 1e-12;

void CheckRank(const Matrix& R) {
  const Eigen::Index p = R.cols();
  const double largest = R.diagonal().cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < p; ++k) {
    const double ratio = largest > 0.0 ? std::abs(R(k, k)) / largest : 0.0;
    if (!(ratio >= kRankTolerance)) {
      throw RankDeficientError(static_cast<std::size_t>(k), ratio);
    }
  }
}

// Flips rows so the diagonal of R is nonnegative. Row k of R and entry k of
// y_proj change sign together, which leaves ||R theta - y_proj|| unchanged.
void NormalizeSigns(Matrix& R, Vector& y_proj) {
  for (Eigen::Index k = 0; k < R.rows(); ++k) {
    if (R(k, k) < 0.0) {
      R.row(k) *= -1.0;
      y_proj(k) = -y_proj(k);
    }
  }
}

}  // namespace

void ValidateDataset(const Dataset& data, const char* name) {
  const std::string label(name);
  if (data.X.cols() == 0) {
    Fail(ErrorKind::kInvalidInput, label + " data has no feature columns");
  }
  if (data.X.rows() != data.y.size()) {
    Fail(ErrorKind::kInvalidInput,
         label + " data has " + std::to_string(data.X.rows()) + " rows but " +
             std::to_string(data.y.size()) + " labels");
  }
  if (data.X.rows() < data.X.cols()) {
    Fail(ErrorKind::kInvalidInput,
         label + " data must have at least as many rows as features (" +
             std::to_string(data.X.rows()) + " < " +
             std::to_string(data.X.cols()) + ")");
  }
  if (!data.X.allFinite() || !data.y.allFinite()) {
    Fail(ErrorKind::kInvalidInput, label + " data contains non-finite values");
  }
}

double CenteringInfo::Intercept(const Vector& theta) const {
  return label_mean - feature_means.dot(theta);
}

CenteredSplits Center(const Dataset& train, const Dataset& test) {
  if (train.X.cols() != test.X.cols()) {
    Fail(ErrorKind::kInvalidInput,
         "train and test have different feature counts (" +
             std::to_string(train.X.cols()) + " vs " +
             std::to_string(test.X.cols()) + ")");
  }
  if (train.X.rows() < 1) {
    Fail(ErrorKind::kInvalidInput, "cannot center an empty training split");
  }
  if (train.X.rows() != train.y.size() || test.X.rows() != test.y.size()) {
    Fail(ErrorKind::kInvalidInput, "row count and label count disagree");
  }

  CenteredSplits out;
  out.info.feature_means = train.X.colwise().mean().transpose();
  out.info.label_mean = train.y.mean();

  out.train.X = train.X.rowwise() - out.info.feature_means.transpose();
  out.train.y = train.y.array() - out.info.label_mean;
  out.test.X = test.X.rowwise() - out.info.feature_means.transpose();
  out.test.y = test.y.array() - out.info.label_mean;
  return out;
}

ReducedData QrReduce(const Dataset& data) {
  ValidateDataset(data, "input");
  const Eigen::Index p = data.X.cols();

  Eigen::HouseholderQR<Matrix> qr(data.X);
  ReducedData out;
  out.R = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  const Vector rotated = qr.householderQ().adjoint() * data.y;
  out.y_proj = rotated.head(p);
  NormalizeSigns(out.R, out.y_proj);
  CheckRank(out.R);

  out.label_sq_norm = data.y.squaredNorm();
  out.residual_sq =
      std::max(0.0, out.label_sq_norm - out.y_proj.squaredNorm());
  return out;
}

GramAccumulator::GramAccumulator(std::size_t features)
    : features_(features),
      gram_(Matrix::Zero(static_cast<Eigen::Index>(features),
                         static_cast<Eigen::Index>(features))),
      cross_(Vector::Zero(static_cast<Eigen::Index>(features))) {}

void GramAccumulator::Add(const Matrix& X_block, const Vector& y_block) {
  if (static_cast<std::size_t>(X_block.cols()) != features_) {
    Fail(ErrorKind::kInvalidInput, "row block has the wrong number of columns");
  }
  if (X_block.rows() != y_block.size()) {
    Fail(ErrorKind::kInvalidInput, "row block has mismatched label count");
  }
  gram_.noalias() += X_block.transpose() * X_block;
  cross_.noalias() += X_block.transpose() * y_block;
  label_sq_ += y_block.squaredNorm();
  rows_seen_ += static_cast<std::size_t>(X_block.rows());
}

ReducedData GramAccumulator::Finish() const {
  const auto p = static_cast<Eigen::Index>(features_);
  if (p == 0) {
    Fail(ErrorKind::kInvalidInput, "no feature columns to reduce");
  }
  if (rows_seen_ < features_) {
    Fail(ErrorKind::kInvalidInput,
         "fewer rows than features across all blocks");
  }

  // Upper Cholesky factor of the leading p x p block of [X y]^T [X y].
  Matrix R = Matrix::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double diag = gram_(j, j);
    const double pivot =
        diag - R.col(j).head(j).squaredNorm();
    if (!(diag > 0.0) || !(pivot > kCholeskyPivotTolerance * diag)) {
      Fail(ErrorKind::kConditioning,
           "Cholesky factorization of the Gram matrix failed at column " +
               std::to_string(j) +
               "; the Cholesky path is less stable than QR, use the QR "
               "reduction for this data");
    }
    R(j, j) = std::sqrt(pivot);
    for (Eigen::Index i = j + 1; i < p; ++i) {
      R(j, i) = (gram_(j, i) - R.col(j).head(j).dot(R.col(i).head(j))) /
                R(j, j);
    }
  }

  ReducedData out;
  // The last column of the bordered factor is R^{-T} X^T y and its corner
  // entry is the residual norm.
  out.y_proj = R.transpose().triangularView<Eigen::Lower>().solve(cross_);
  out.R = std::move(R);
  out.label_sq_norm = label_sq_;
  out.residual_sq = std::max(0.0, label_sq_ - out.y_proj.squaredNorm());
  return out;
}

ReducedData CholeskyReduce(std::span<const Dataset> blocks) {
  if (blocks.empty()) {
    Fail(ErrorKind::kInvalidInput, "no row blocks to reduce");
  }
  GramAccumulator acc(blocks.front().features());
  for (const Dataset& block : blocks) {
    acc.Add(block.X, block.y);
  }
  return acc.Finish();
}

ReducedData CholeskyReduce(const Dataset& data, std::size_t block_rows) {
  ValidateDataset(data, "input");
  if (block_rows == 0) {
    Fail(ErrorKind::kInvalidInput, "block size must be positive");
  }
  GramAccumulator acc(data.features());
  const auto n = static_cast<Eigen::Index>(data.rows());
  const auto step = static_cast<Eigen::Index>(block_rows);
  for (Eigen::Index start = 0; start < n; start += step) {
    const Eigen::Index len = std::min(step, n - start);
    acc.Add(data.X.middleRows(start, len), data.y.segment(start, len));
  }
  return acc.Finish();
}

Dataset RidgeStack(const Dataset& data, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    Fail(ErrorKind::kInvalidInput, "lambda must be positive");
  }
  if (data.X.rows() < 1 || data.X.rows() != data.y.size()) {
    Fail(ErrorKind::kInvalidInput, "ridge stacking needs a nonempty split");
  }
  const Eigen::Index n = data.X.rows();
  const Eigen::Index p = data.X.cols();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));

  Dataset out;
  out.X.resize(n + p, p);
  out.X.topRows(n) = data.X * scale;
  out.X.bottomRows(p) = Matrix::Identity(p, p) * std::sqrt(lambda);
  out.y = Vector::Zero(n + p);
  out.y.head(n) = data.y * scale;
  return out;
}

Vector SolveFullModel(const ReducedData& reduced) {
  return reduced.R.triangularView<Eigen::Upper>().solve(reduced.y_proj);
}

}  // namespace lsspa
