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

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "lsspa/error.hpp"

int main(int argc, char** argv) {
  using namespace lsspa::cli;

  CLI::App app{"Least-squares Shapley attribution of out-of-sample R^2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lsspa 0.1.0");

  AttributeOptions attribute;
  CLI::App* attribute_cmd = app.add_subcommand(
      "attribute", "Attribute the test R^2 of a linear model to its features");
  AddAttributeOptions(*attribute_cmd, attribute);

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Compare samplers against a ground truth on synthetic data");
  AddBenchOptions(*bench_cmd, bench);

  GenerateOptions generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic train/test pair as CSV");
  AddGenerateOptions(*generate_cmd, generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*attribute_cmd) return RunAttribute(attribute);
    if (*bench_cmd) return RunBench(bench);
    if (*generate_cmd) return RunGenerate(generate);
  } catch (const lsspa::Error& e) {
    std::cerr << "lsspa: error: " << e.what() << " ["
              << lsspa::ErrorKindName(e.kind()) << "]\n";
    return lsspa::IsNumericalFailure(e.kind()) ? kExitNumerical : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "lsspa: error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
