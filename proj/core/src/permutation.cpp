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

#include "lsspa/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "lsspa/error.hpp"

namespace lsspa {

Permutation::Permutation(std::vector<std::size_t> order)
    : order_(std::move(order)) {
  const std::size_t p = order_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  inverse_.assign(p, kUnset);
  for (std::size_t k = 0; k < p; ++k) {
    const std::size_t feature = order_[k];
    if (feature >= p || inverse_[feature] != kUnset) {
      Fail(ErrorKind::kInvalidInput,
           "not a permutation: entry " + std::to_string(feature) +
               " at position " + std::to_string(k));
    }
    inverse_[feature] = k;
  }
}

Permutation Permutation::Identity(std::size_t p) {
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Permutation(std::move(order));
}

Permutation Permutation::FromOneBased(std::span<const std::size_t> order) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(order.size());
  for (std::size_t v : order) {
    if (v == 0) {
      Fail(ErrorKind::kInvalidInput, "one-based permutation contains 0");
    }
    zero_based.push_back(v - 1);
  }
  return Permutation(std::move(zero_based));
}

std::vector<std::size_t> Permutation::ToOneBased() const {
  std::vector<std::size_t> out(order_);
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::Reversed() const {
  Permutation out;
  out.order_.assign(order_.rbegin(), order_.rend());
  const std::size_t p = order_.size();
  out.inverse_.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    out.inverse_[j] = p - 1 - inverse_[j];
  }
  return out;
}

}  // namespace lsspa
