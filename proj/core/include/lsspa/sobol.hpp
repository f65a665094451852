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

#ifndef LSSPA_SOBOL_HPP_
#define LSSPA_SOBOL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lsspa {

// Sobol' low-discrepancy points in [0, 1)^dimension using the Joe-Kuo
// direction numbers, generated in Gray-code order with 32-bit precision.
//
// The scrambled variant applies a random lower-triangular binary matrix to
// every direction number (linear matrix scramble) followed by a random
// digital shift. The index-0 point is never emitted, in either mode.
class SobolStream {
 public:
  static constexpr std::size_t kMaxDimension = 1111;
  static constexpr int kBits = 32;

  // Unscrambled stream. Throws Error(kUnsupportedDimension) when
  // `dimension` is 0 or exceeds kMaxDimension.
  explicit SobolStream(std::size_t dimension);

  // Scrambled stream; the scramble bits come from a generator seeded with
  // `seed`.
  SobolStream(std::size_t dimension, std::uint64_t seed);

  std::size_t dimension() const { return dimension_; }
  bool scrambled() const { return scrambled_; }

  // Sequence number of the point the next call to Next() returns.
  std::uint64_t next_index() const { return index_ + 1; }

  void Next(std::span<double> point);
  std::vector<double> Next();

 private:
  void Init(std::size_t dimension);

  std::size_t dimension_ = 0;
  bool scrambled_ = false;
  std::vector<std::uint32_t> directions_;  // dimension_ x kBits, row-major
  std::vector<std::uint32_t> state_;
  std::uint64_t index_ = 0;
};

// One row of the published direction-number table: dimension d, primitive
// polynomial degree s, interior coefficients a, initial numbers m_1..m_s.
struct SobolDirectionRow {
  int d;
  int s;
  std::uint32_t a;
  std::uint32_t m[13];
};

std::span<const SobolDirectionRow> SobolDirectionTable();

}  // namespace lsspa

#endif  // LSSPA_SOBOL_HPP_
