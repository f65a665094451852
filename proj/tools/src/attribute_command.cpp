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

#include <chrono>
#include <iostream>

#include "commands.hpp"
#include "lsspa/csv.hpp"
#include "lsspa/error.hpp"
#include "lsspa/report.hpp"

namespace lsspa::cli {

void AddAttributeOptions(CLI::App& cmd, AttributeOptions& opts) {
  RunConfig& c = opts.config;
  cmd.add_option("--train", opts.train_path, "Training CSV")->required();
  cmd.add_option("--test", opts.test_path, "Test CSV")->required();
  cmd.add_option("--target", opts.target,
                 "Label column name, or 'last' (default)");
  cmd.add_option("--max-perms", c.max_permutations,
                 "Maximum number of sampled permutations K")
      ->capture_default_str();
  cmd.add_option("--batch-size", c.batch_size, "Batch size B")
      ->capture_default_str();
  cmd.add_option("--tolerance", c.tolerance,
                 "Stop once the estimated overall error falls below this")
      ->capture_default_str();
  cmd.add_option("--quantile", c.quantile, "Error quantile q")
      ->capture_default_str();
  cmd.add_option("--risk-draws", c.risk_draws,
                 "Normal draws per risk estimate")
      ->capture_default_str();
  cmd.add_option("--sampler", opts.sampler, "Permutation sampler")
      ->check(CLI::IsMember({"mc", "argsort-qmc"}))
      ->capture_default_str();
  cmd.add_flag("--antithetical", c.sampler.antithetical,
               "Pair every permutation with its reverse");
  cmd.add_option("--ridge", c.ridge_lambda, "Ridge penalty lambda");
  cmd.add_flag("--no-center", opts.no_center,
                "Fit without an intercept (no centering)");
  cmd.add_option("--reduction", opts.reduction, "Reduction of the data")
      ->check(CLI::IsMember({"qr", "cholesky"}))
      ->capture_default_str();
  cmd.add_option("--seed", c.sampler.seed, "Random seed")
      ->capture_default_str();
  cmd.add_option("--out", opts.out_path, "Report JSON path, '-' for stdout")
      ->capture_default_str();
  cmd.add_option("--history", opts.history_path,
                 "Write the per-batch history CSV here");
}

int RunAttribute(AttributeOptions opts) {
  RunConfig& config = opts.config;
  config.sampler.kind = *ParseSamplerKind(opts.sampler);
  config.reduction_path = *ParseReductionPath(opts.reduction);
  config.center = !opts.no_center;
  // One user-facing seed drives both the sampler and the risk draws.
  config.seed = config.sampler.seed;
  ValidateRunConfig(config);

  const LabeledDataset train = SplitTarget(ReadCsv(opts.train_path), opts.target);
  const LabeledDataset test = SplitTarget(ReadCsv(opts.test_path), opts.target);
  if (train.feature_names != test.feature_names) {
    Fail(ErrorKind::kInvalidInput,
         "train and test CSV files have different feature columns");
  }

  const auto start = std::chrono::steady_clock::now();
  ReportDocument report;
  report.result = Attribute(train.data, test.data, config);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  report.feature_names = train.feature_names;
  report.config = config;
  report.wall_time_seconds = elapsed.count();

  if (!report.result.converged) {
    std::cerr << "lsspa: warning: tolerance not reached (estimated error "
              << report.result.overall_error << " >= " << config.tolerance
              << " after " << report.result.total_lift_vectors
              << " samples)\n";
  }

  const std::string json = RenderReportJson(report);
  if (opts.out_path == "-") {
    std::cout << json;
  } else {
    WriteFileAtomic(opts.out_path, json);
    std::cout << opts.out_path << "\n";
  }
  if (opts.history_path) {
    WriteFileAtomic(*opts.history_path, RenderHistoryCsv(report.result));
  }
  return kExitOk;
}

}  // namespace lsspa::cli
