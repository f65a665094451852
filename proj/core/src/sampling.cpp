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

#include "lsspa/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lsspa/error.hpp"

namespace lsspa {

std::string_view SamplerKindName(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kMonteCarlo:
      return "mc";
    case SamplerKind::kArgsortQmc:
      return "argsort-qmc";
  }
  return "unknown";
}

std::optional<SamplerKind> ParseSamplerKind(std::string_view name) {
  if (name == "mc") return SamplerKind::kMonteCarlo;
  if (name == "argsort-qmc") return SamplerKind::kArgsortQmc;
  return std::nullopt;
}

Permutation UniformPermutation(Rng& rng, std::size_t p) {
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = p; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  return Permutation(std::move(order));
}

Permutation ArgsortPermutation(std::span<const double> point) {
  std::vector<std::size_t> order(point.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return point[a] < point[b];
                   });
  return Permutation(std::move(order));
}

PermutationStream::PermutationStream(const SamplerConfig& config)
    : config_(config), rng_(config.seed) {
  if (config_.dimension == 0) {
    Fail(ErrorKind::kInvalidConfig, "sampler dimension must be positive");
  }
  if (config_.kind == SamplerKind::kArgsortQmc) {
    sobol_.emplace(config_.dimension, config_.seed);
    point_.resize(config_.dimension);
  }
}

Permutation PermutationStream::Next() {
  if (sobol_) {
    sobol_->Next(point_);
    return ArgsortPermutation(point_);
  }
  return UniformPermutation(rng_, config_.dimension);
}

std::vector<Permutation> PermutationStream::Take(std::size_t count) {
  std::vector<Permutation> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Next());
  return out;
}

std::vector<Permutation> GeneratePermutations(const SamplerConfig& config,
                                              std::size_t count) {
  if (count == 0) {
    Fail(ErrorKind::kInvalidInput, "permutation count must be positive");
  }
  PermutationStream stream(config);
  return stream.Take(count);
}

}  // namespace lsspa
