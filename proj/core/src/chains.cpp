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

#include "lsspa/chains.hpp"

#include <string>

#include "lsspa/error.hpp"

namespace lsspa {
namespace {

// Columns of `source` in chain order, i.e. source * P^T without forming P.
Matrix GatherColumns(const Matrix& source, const Permutation& perm) {
  const Eigen::Index p = source.cols();
  Matrix out(source.rows(), p);
  for (Eigen::Index k = 0; k < p; ++k) {
    out.col(k) = source.col(static_cast<Eigen::Index>(perm[k]));
  }
  return out;
}

void CheckSize(const ReducedData& data, const Permutation& perm,
               const char* what) {
  if (data.features() != perm.size() ||
      data.R.rows() != data.R.cols() ||
      static_cast<std::size_t>(data.y_proj.size()) != perm.size()) {
    Fail(ErrorKind::kInvalidInput,
         std::string(what) + " reduced data does not match permutation size " +
             std::to_string(perm.size()));
  }
}

}  // namespace

Vector ChainSolution::Coefficients(std::size_t k) const {
  const Eigen::Index p = theta_tilde.cols();
  Vector theta = Vector::Zero(p);
  for (std::size_t i = 0; i < k; ++i) {
    theta(static_cast<Eigen::Index>(perm[i])) =
        theta_tilde(static_cast<Eigen::Index>(i),
                    static_cast<Eigen::Index>(k - 1));
  }
  return theta;
}

ChainSolution SolveChain(const ReducedData& train, const Permutation& perm) {
  CheckSize(train, perm, "train");
  const Eigen::Index p = train.R.cols();

  Eigen::HouseholderQR<Matrix> qr(GatherColumns(train.R, perm));
  Matrix r_tilde = qr.matrixQR().triangularView<Eigen::Upper>();
  Vector q_tilde = qr.householderQ().adjoint() * train.y_proj;

  // Same nonnegative-diagonal convention as the reductions.
  for (Eigen::Index k = 0; k < p; ++k) {
    if (r_tilde(k, k) < 0.0) {
      r_tilde.row(k) *= -1.0;
      q_tilde(k) = -q_tilde(k);
    }
    if (r_tilde(k, k) == 0.0) {
      Fail(ErrorKind::kNumerical,
           "singular triangular factor at chain position " + std::to_string(k));
    }
  }

  // triu(q_tilde 1^T): column k keeps the first k + 1 entries of q_tilde.
  Matrix rhs = Matrix::Zero(p, p);
  for (Eigen::Index k = 0; k < p; ++k) {
    rhs.col(k).head(k + 1) = q_tilde.head(k + 1);
  }
  r_tilde.triangularView<Eigen::Upper>().solveInPlace(rhs);

  return ChainSolution{std::move(rhs), perm};
}

Vector EvaluateChain(const ChainSolution& solution, const ReducedData& test) {
  CheckSize(test, solution.perm, "test");
  if (!(test.label_sq_norm > 0.0)) {
    Fail(ErrorKind::kUndefinedMetric,
         "R^2 is undefined: test labels have zero norm");
  }
  const Eigen::Index p = test.R.cols();

  // Column k holds R_tst P^T theta_k - y_proj_tst for the (k+1)-feature model.
  Matrix residuals = GatherColumns(test.R, solution.perm) *
                     solution.theta_tilde.triangularView<Eigen::Upper>();
  residuals.colwise() -= test.y_proj;

  Vector r2(p + 1);
  r2(0) = 0.0;
  const double denom = test.label_sq_norm;
  for (Eigen::Index k = 0; k < p; ++k) {
    const double err = residuals.col(k).squaredNorm() + test.residual_sq;
    r2(k + 1) = (denom - err) / denom;
  }
  return r2;
}

LiftVector MakeLiftVector(const Vector& r2_sequence, const Permutation& perm) {
  const std::size_t p = perm.size();
  if (static_cast<std::size_t>(r2_sequence.size()) != p + 1) {
    Fail(ErrorKind::kInvalidInput,
         "R^2 sequence must have p + 1 = " + std::to_string(p + 1) +
             " entries");
  }
  LiftVector out;
  out.lifts.resize(static_cast<Eigen::Index>(p));
  for (std::size_t k = 0; k < p; ++k) {
    const auto pos = static_cast<Eigen::Index>(k);
    out.lifts(static_cast<Eigen::Index>(perm[k])) =
        r2_sequence(pos + 1) - r2_sequence(pos);
  }
  out.r2_full = r2_sequence(static_cast<Eigen::Index>(p));
  return out;
}

LiftVector ComputeLifts(const ReducedData& train, const ReducedData& test,
                        const Permutation& perm) {
  return MakeLiftVector(EvaluateChain(SolveChain(train, perm), test), perm);
}

LiftVector ComputeAntitheticLifts(const ReducedData& train,
                                  const ReducedData& test,
                                  const Permutation& perm) {
  LiftVector forward = ComputeLifts(train, test, perm);
  const LiftVector backward = ComputeLifts(train, test, perm.Reversed());
  forward.lifts = 0.5 * (forward.lifts + backward.lifts);
  forward.r2_full = 0.5 * (forward.r2_full + backward.r2_full);
  return forward;
}

}  // namespace lsspa
