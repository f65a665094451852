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

#ifndef LSSPA_PERMUTATION_HPP_
#define LSSPA_PERMUTATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace lsspa {

// A feature ordering together with its inverse. Indices are zero-based:
// order()[k] is the feature added at chain position k, and
// inverse()[order()[k]] == k.
class Permutation {
 public:
  Permutation() = default;

  // Throws Error(kInvalidInput) unless `order` is a bijection on [0, p).
  explicit Permutation(std::vector<std::size_t> order);

  static Permutation Identity(std::size_t p);

  // Accepts the one-based notation used in tables and reports.
  static Permutation FromOneBased(std::span<const std::size_t> order);
  std::vector<std::size_t> ToOneBased() const;

  std::size_t size() const { return order_.size(); }
  std::span<const std::size_t> order() const { return order_; }
  std::span<const std::size_t> inverse() const { return inverse_; }
  std::size_t operator[](std::size_t position) const {
    return order_[position];
  }

  // The ordering read back to front, so the last feature is added first.
  Permutation Reversed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> inverse_;
};

inline Permutation Reverse(const Permutation& perm) { return perm.Reversed(); }

}  // namespace lsspa

#endif  // LSSPA_PERMUTATION_HPP_
