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

#include "lsspa/sobol.hpp"

#include <bit>
#include <iterator>
#include <random>
#include <string>

#include "lsspa/error.hpp"

namespace lsspa {
namespace {

constexpr SobolDirectionRow kDirectionTable[] = {
#include "sobol_directions.inc"
};

static_assert(std::size(kDirectionTable) == SobolStream::kMaxDimension - 1);

constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32

// Direction numbers v_1..v_32 of one coordinate, scaled so that v_k has its
// leading bit at position 32 - k.
void FillDirections(std::size_t coordinate, std::uint32_t* v) {
  constexpr int kBits = SobolStream::kBits;
  if (coordinate == 0) {
    for (int k = 0; k < kBits; ++k) v[k] = 1u << (kBits - 1 - k);
    return;
  }
  const SobolDirectionRow& row = kDirectionTable[coordinate - 1];
  const int s = row.s;
  for (int k = 0; k < s && k < kBits; ++k) {
    v[k] = row.m[k] << (kBits - 1 - k);
  }
  for (int k = s; k < kBits; ++k) {
    std::uint32_t next = v[k - s] ^ (v[k - s] >> s);
    for (int i = 1; i < s; ++i) {
      if ((row.a >> (s - 1 - i)) & 1u) next ^= v[k - i];
    }
    v[k] = next;
  }
}

}  // namespace

std::span<const SobolDirectionRow> SobolDirectionTable() {
  return kDirectionTable;
}

void SobolStream::Init(std::size_t dimension) {
  if (dimension == 0 || dimension > kMaxDimension) {
    Fail(ErrorKind::kUnsupportedDimension,
         "Sobol' dimension " + std::to_string(dimension) +
             " is outside the supported range [1, " +
             std::to_string(kMaxDimension) + "]");
  }
  dimension_ = dimension;
  directions_.assign(dimension * kBits, 0u);
  for (std::size_t c = 0; c < dimension; ++c) {
    FillDirections(c, &directions_[c * kBits]);
  }
  state_.assign(dimension, 0u);
  index_ = 0;
}

SobolStream::SobolStream(std::size_t dimension) { Init(dimension); }

SobolStream::SobolStream(std::size_t dimension, std::uint64_t seed) {
  Init(dimension);
  scrambled_ = true;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);

  // Row i of the lower-triangular matrix acts on bit positions counted from
  // the most significant bit; the diagonal is fixed to one.
  std::uint32_t rows[kBits];
  for (std::size_t c = 0; c < dimension; ++c) {
    for (int i = 0; i < kBits; ++i) {
      std::uint32_t mask = 1u << (kBits - 1 - i);
      for (int k = 0; k < i; ++k) {
        if (coin(rng)) mask |= 1u << (kBits - 1 - k);
      }
      rows[i] = mask;
    }
    std::uint32_t* v = &directions_[c * kBits];
    for (int k = 0; k < kBits; ++k) {
      std::uint32_t scrambled = 0;
      for (int i = 0; i < kBits; ++i) {
        if (std::popcount(rows[i] & v[k]) & 1) {
          scrambled |= 1u << (kBits - 1 - i);
        }
      }
      v[k] = scrambled;
    }
  }
  // Digital shift: the index-0 point becomes the shift itself.
  for (std::size_t c = 0; c < dimension; ++c) {
    state_[c] = static_cast<std::uint32_t>(rng() >> 32);
  }
}

void SobolStream::Next(std::span<double> point) {
  if (point.size() != dimension_) {
    Fail(ErrorKind::kInvalidInput, "Sobol' output buffer has wrong size");
  }
  if (index_ + 1 >= (std::uint64_t{1} << kBits)) {
    Fail(ErrorKind::kUnsupportedDimension, "Sobol' sequence exhausted");
  }
  ++index_;
  const int bit = std::countr_zero(index_);
  for (std::size_t c = 0; c < dimension_; ++c) {
    state_[c] ^= directions_[c * kBits + static_cast<std::size_t>(bit)];
    point[c] = static_cast<double>(state_[c]) * kScale;
  }
}

std::vector<double> SobolStream::Next() {
  std::vector<double> point(dimension_);
  Next(point);
  return point;
}

}  // namespace lsspa
