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

#ifndef LSSPA_SAMPLING_HPP_
#define LSSPA_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "lsspa/permutation.hpp"
#include "lsspa/sobol.hpp"

namespace lsspa {

using Rng = std::mt19937_64;

enum class SamplerKind { kMonteCarlo, kArgsortQmc };

std::string_view SamplerKindName(SamplerKind kind);
std::optional<SamplerKind> ParseSamplerKind(std::string_view name);

struct SamplerConfig {
  SamplerKind kind = SamplerKind::kArgsortQmc;
  std::uint64_t seed = 0;
  // When set, consumers pair each emitted permutation with its reversal.
  // The stream itself still emits base permutations only.
  bool antithetical = false;
  std::size_t dimension = 1;
};

// Fisher-Yates shuffle of the identity.
Permutation UniformPermutation(Rng& rng, std::size_t p);

// Positions of the coordinates in ascending order; ties go to the lower
// index.
Permutation ArgsortPermutation(std::span<const double> point);

// Lazily generated permutation sequence for one sampler configuration.
class PermutationStream {
 public:
  explicit PermutationStream(const SamplerConfig& config);

  const SamplerConfig& config() const { return config_; }

  Permutation Next();
  std::vector<Permutation> Take(std::size_t count);

 private:
  SamplerConfig config_;
  Rng rng_;
  std::optional<SobolStream> sobol_;
  std::vector<double> point_;
};

// The first `count` permutations of the configured stream.
std::vector<Permutation> GeneratePermutations(const SamplerConfig& config,
                                              std::size_t count);

}  // namespace lsspa

#endif  // LSSPA_SAMPLING_HPP_
