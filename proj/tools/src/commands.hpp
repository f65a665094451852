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

#ifndef LSSPA_TOOLS_COMMANDS_HPP_
#define LSSPA_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lsspa/pipeline.hpp"

namespace lsspa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;

struct AttributeOptions {
  std::string train_path;
  std::string test_path;
  std::optional<std::string> target;
  RunConfig config;
  std::string sampler = "argsort-qmc";
  std::string reduction = "qr";
  bool no_center = false;
  std::string out_path = "report.json";
  std::optional<std::string> history_path;
};

struct BenchOptions {
  std::string preset = "toy";
  std::size_t seeds = 1;
  std::string out_dir = "bench_out";
  std::optional<int> truth_log2;
};

struct GenerateOptions {
  bool toy = false;
  std::size_t p = 20;
  std::size_t n_train = 10000;
  std::size_t n_test = 10000;
  std::optional<std::size_t> factors;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

void AddAttributeOptions(CLI::App& cmd, AttributeOptions& opts);
void AddBenchOptions(CLI::App& cmd, BenchOptions& opts);
void AddGenerateOptions(CLI::App& cmd, GenerateOptions& opts);

// Each command returns an exit code; lsspa::Error propagates to main.
int RunAttribute(AttributeOptions opts);
int RunBench(const BenchOptions& opts);
int RunGenerate(const GenerateOptions& opts);

}  // namespace lsspa::cli

#endif  // LSSPA_TOOLS_COMMANDS_HPP_
