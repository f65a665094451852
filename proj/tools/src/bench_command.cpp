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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "lsspa/csv.hpp"
#include "lsspa/error.hpp"
#include "lsspa/estimator.hpp"
#include "lsspa/synthdata.hpp"

namespace lsspa::cli {
namespace {

struct Preset {
  SynthSpec spec;
  bool toy = false;
  std::size_t max_permutations = 0;
  std::size_t batch_size = 0;
  int truth_log2 = 0;
};

Preset LookupPreset(const std::string& name) {
  Preset preset;
  if (name == "toy") {
    preset.toy = true;
    preset.max_permutations = std::size_t{1} << 10;
    preset.batch_size = std::size_t{1} << 5;
  } else if (name == "medium-desk") {
    preset.spec.p = 20;
    preset.spec.n_train = 10000;
    preset.spec.n_test = 10000;
    preset.max_permutations = std::size_t{1} << 13;
    preset.batch_size = std::size_t{1} << 8;
    preset.truth_log2 = 18;
  } else {
    Fail(ErrorKind::kInvalidConfig, "unknown preset '" + name +
                                        "' (expected toy or medium-desk)");
  }
  return preset;
}

struct Method {
  const char* name;
  SamplerKind kind;
  bool antithetical;
};

constexpr Method kMethods[] = {
    {"mc", SamplerKind::kMonteCarlo, false},
    {"mc-antithetical", SamplerKind::kMonteCarlo, true},
    {"argsort-qmc", SamplerKind::kArgsortQmc, false},
    {"argsort-qmc-antithetical", SamplerKind::kArgsortQmc, true},
};

// Exact when every ordering can be enumerated, otherwise a long
// antithetical Monte Carlo run with its own seed.
Vector GroundTruth(const PreparedProblem& prob, int truth_log2,
                   std::uint64_t seed) {
  const std::size_t p = prob.train.features();
  if (p <= kMaxExactFeatures) {
    return MeanLifts(prob.train, prob.test, AllPermutations(p));
  }
  RunConfig config;
  config.max_permutations = std::size_t{1} << truth_log2;
  config.batch_size = std::min<std::size_t>(config.max_permutations, 1 << 12);
  config.tolerance = 1e-300;
  config.risk_draws = 100;
  config.sampler.kind = SamplerKind::kMonteCarlo;
  config.sampler.antithetical = true;
  config.sampler.seed = seed ^ 0x7275746800000000ULL;
  return AttributePrepared(prob, config).shapley;
}

}  // namespace

void AddBenchOptions(CLI::App& cmd, BenchOptions& opts) {
  cmd.add_option("--preset", opts.preset, "toy or medium-desk")
      ->capture_default_str();
  cmd.add_option("--seeds", opts.seeds, "Number of independent seeds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--out", opts.out_dir, "Output directory")
      ->capture_default_str();
  cmd.add_option("--truth-log2", opts.truth_log2,
                 "log2 of the ground-truth sample count when p > 10")
      ->check(CLI::Range(4, 30));
}

int RunBench(const BenchOptions& opts) {
  const Preset preset = LookupPreset(opts.preset);
  const int truth_log2 = opts.truth_log2.value_or(preset.truth_log2);
  const std::filesystem::path dir(opts.out_dir);
  std::filesystem::create_directories(dir);

  std::string summary =
      "method,seed,samples,initial_true_error,final_true_error,"
      "final_sigma_hat\n";
  // final error per method per seed, for the console digest
  std::vector<std::vector<double>> finals(std::size(kMethods));

  for (std::uint64_t seed = 0; seed < opts.seeds; ++seed) {
    SyntheticProblem data;
    RunConfig base;
    if (preset.toy) {
      data = GenerateToy(seed);
      base.center = false;
    } else {
      SynthSpec spec = preset.spec;
      spec.seed = seed;
      data = GenerateDataset(spec);
      base.center = false;  // the generator already centers
    }
    base.max_permutations = preset.max_permutations;
    base.batch_size = preset.batch_size;
    base.tolerance = 1e-300;  // record the whole error curve
    base.seed = seed;
    const PreparedProblem prob = Prepare(data.train, data.test, base);
    const Vector truth = GroundTruth(prob, truth_log2, seed);
    WriteFileAtomic(dir / ("truth_seed" + std::to_string(seed) + ".csv"),
                    FormatCsv({"shapley"}, truth));

    for (std::size_t m = 0; m < std::size(kMethods); ++m) {
      RunConfig config = base;
      config.sampler.kind = kMethods[m].kind;
      config.sampler.antithetical = kMethods[m].antithetical;
      config.sampler.seed = seed;
      const AttributionResult result = AttributePrepared(prob, config);

      std::string history = "batch_index,samples,sigma_hat,true_error\n";
      for (const HistoryEntry& h : result.history) {
        history += std::to_string(h.batch_index) + ',' +
                   std::to_string(h.samples) + ',' +
                   FormatNumber(h.sigma_hat) + ',' +
                   FormatNumber((h.s_hat - truth).norm()) + '\n';
      }
      WriteFileAtomic(dir / (std::string(kMethods[m].name) + "_seed" +
                             std::to_string(seed) + ".csv"),
                      history);

      const double initial = (result.history.front().s_hat - truth).norm();
      const double final_error = (result.shapley - truth).norm();
      finals[m].push_back(final_error);
      summary += std::string(kMethods[m].name) + ',' + std::to_string(seed) +
                 ',' + std::to_string(result.total_lift_vectors) + ',' +
                 FormatNumber(initial) + ',' + FormatNumber(final_error) +
                 ',' + FormatNumber(result.overall_error) + '\n';
    }
  }
  WriteFileAtomic(dir / "summary.csv", summary);

  std::printf("%-26s %s\n", "method", "mean final true error");
  for (std::size_t m = 0; m < std::size(kMethods); ++m) {
    double mean = 0.0;
    for (double e : finals[m]) mean += e;
    std::printf("%-26s %.6g\n", kMethods[m].name,
                mean / static_cast<double>(finals[m].size()));
  }
  std::size_t qmc_wins = 0;
  for (std::size_t s = 0; s < opts.seeds; ++s) {
    qmc_wins += finals[2][s] <= finals[0][s];
  }
  std::printf("argsort-qmc <= mc in %zu of %zu seeds\n", qmc_wins, opts.seeds);
  std::printf("%s\n", (dir / "summary.csv").string().c_str());
  return kExitOk;
}

}  // namespace lsspa::cli
