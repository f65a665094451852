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

#ifndef LSSPA_DATASET_HPP_
#define LSSPA_DATASET_HPP_

#include <cstddef>

#include <Eigen/Dense>

namespace lsspa {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// One split (train or test) of a regression problem: `X` is rows x p, `y`
// holds one label per row.
struct Dataset {
  Matrix X;
  Vector y;

  std::size_t rows() const { return static_cast<std::size_t>(X.rows()); }
  std::size_t features() const { return static_cast<std::size_t>(X.cols()); }
};

// Validates that `X` and `y` agree on the row count and that the split is
// square or tall. Throws Error(kInvalidInput) otherwise.
void ValidateDataset(const Dataset& data, const char* name);

}  // namespace lsspa

#endif  // LSSPA_DATASET_HPP_
