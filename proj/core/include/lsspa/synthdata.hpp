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

#ifndef LSSPA_SYNTHDATA_HPP_
#define LSSPA_SYNTHDATA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "lsspa/dataset.hpp"
#include "lsspa/sampling.hpp"

namespace lsspa {

struct SynthSpec {
  std::size_t p = 20;
  std::size_t n_train = 10000;
  std::size_t n_test = 10000;
  std::uint64_t seed = 0;
  // Number of shared factor columns in F. Defaults to max(1, p / 20); zero
  // gives uncorrelated features (C = I).
  std::optional<std::size_t> factor_count;
};

// Correlation matrix of F F^T + I with i.i.d. standard normal F of size
// p x factors.
Matrix GenerateCorrelation(std::size_t p, std::size_t factors, Rng& rng);

inline std::size_t DefaultFactorCount(std::size_t p) {
  return p / 20 > 0 ? p / 20 : 1;
}

struct SyntheticProblem {
  Dataset train;
  Dataset test;
  Vector theta_true;
  Matrix correlation;
};

// Rows of X ~ N(0, C); floor((p + 1) / 10) coefficients equal to 2 at
// random positions; label noise with variance 3 p^2 / 2. Both splits are
// centered by the train feature and label means.
SyntheticProblem GenerateDataset(const SynthSpec& spec);

// Three correlated features, weights (2.1, 1.4, 0.1), unit noise, 50 train
// and 50 test rows. Not centered.
SyntheticProblem GenerateToy(std::uint64_t seed);

}  // namespace lsspa

#endif  // LSSPA_SYNTHDATA_HPP_
