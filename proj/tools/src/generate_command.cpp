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

#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "lsspa/csv.hpp"
#include "lsspa/synthdata.hpp"

namespace lsspa::cli {

void AddGenerateOptions(CLI::App& cmd, GenerateOptions& opts) {
  cmd.add_flag("--toy", opts.toy,
               "Three-feature toy problem (N = M = 50, no intercept)");
  cmd.add_option("--p", opts.p, "Number of features")->capture_default_str();
  cmd.add_option("--n-train", opts.n_train, "Training rows")
      ->capture_default_str();
  cmd.add_option("--n-test", opts.n_test, "Test rows")->capture_default_str();
  cmd.add_option("--factors", opts.factors,
                 "Shared factors in the correlation (default max(1, p/20))");
  cmd.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  cmd.add_option("--out-dir", opts.out_dir,
                 "Directory for train.csv, test.csv and theta.csv")
      ->capture_default_str();
}

int RunGenerate(const GenerateOptions& opts) {
  SyntheticProblem prob;
  if (opts.toy) {
    prob = GenerateToy(opts.seed);
  } else {
    SynthSpec spec;
    spec.p = opts.p;
    spec.n_train = opts.n_train;
    spec.n_test = opts.n_test;
    spec.seed = opts.seed;
    spec.factor_count = opts.factors;
    prob = GenerateDataset(spec);
  }

  const std::filesystem::path dir(opts.out_dir);
  std::filesystem::create_directories(dir);
  const auto names =
      DefaultFeatureNames(static_cast<std::size_t>(prob.train.features()));
  WriteFileAtomic(dir / "train.csv", FormatDatasetCsv(prob.train, names, "y"));
  WriteFileAtomic(dir / "test.csv", FormatDatasetCsv(prob.test, names, "y"));
  WriteFileAtomic(dir / "theta.csv", FormatCsv({"theta"}, prob.theta_true));
  std::cout << (dir / "train.csv").string() << "\n"
            << (dir / "test.csv").string() << "\n";
  return kExitOk;
}

}  // namespace lsspa::cli
