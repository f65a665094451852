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

#ifndef LSSPA_CHAINS_HPP_
#define LSSPA_CHAINS_HPP_

#include "lsspa/dataset.hpp"
#include "lsspa/permutation.hpp"
#include "lsspa/reduction.hpp"

namespace lsspa {

// Parameters of every model along one feature chain. Column k of
// `theta_tilde` holds the coefficients of the model using the first k + 1
// features of `perm`, expressed in permuted coordinates, so entries below
// the diagonal are zero. Mapping back to feature order is
// theta[perm[i]] = theta_tilde(i, k).
struct ChainSolution {
  Matrix theta_tilde;
  Permutation perm;

  // Coefficients of the k-feature model (k in [1, p]) in feature order.
  Vector Coefficients(std::size_t k) const;
};

// Per-feature R^2 increments along one chain. lifts[j] is indexed by
// feature, not by chain position, and sums to r2_full.
struct LiftVector {
  Vector lifts;
  double r2_full = 0.0;
};

// Solves all p nested least-squares problems of the chain with a single QR
// factorization of the column-permuted training factor, O(p^3).
ChainSolution SolveChain(const ReducedData& train, const Permutation& perm);

// Out-of-sample R^2 of every model in the chain: element 0 is the empty
// model (exactly 0), element k uses the first k features. O(p^3).
Vector EvaluateChain(const ChainSolution& solution, const ReducedData& test);

LiftVector MakeLiftVector(const Vector& r2_sequence, const Permutation& perm);

// SolveChain + EvaluateChain + MakeLiftVector.
LiftVector ComputeLifts(const ReducedData& train, const ReducedData& test,
                        const Permutation& perm);

// Average of L(perm) and L(reverse(perm)).
LiftVector ComputeAntitheticLifts(const ReducedData& train,
                                  const ReducedData& test,
                                  const Permutation& perm);

}  // namespace lsspa

#endif  // LSSPA_CHAINS_HPP_
