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

#ifndef LSSPA_ERROR_HPP_
#define LSSPA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsspa {

// Broad failure classes. The CLI maps kInvalidInput/kInvalidConfig to exit
// code 2 and the numerical classes to exit code 3.
enum class ErrorKind {
  kInvalidInput,
  kInvalidConfig,
  kRankDeficient,
  kConditioning,
  kUndefinedMetric,
  kInsufficientSamples,
  kNumerical,
  kUnsupportedDimension,
  kTooLarge,
};

const char* ErrorKindName(ErrorKind kind);

// True for failures caused by the data rather than by the caller's
// arguments (rank deficiency, Cholesky breakdown, indefinite covariance).
bool IsNumericalFailure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class RankDeficientError : public Error {
 public:
  // `column` is the zero-based index of the first column whose pivot fell
  // below the relative threshold.
  RankDeficientError(std::size_t column, double ratio);

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace lsspa

#endif  // LSSPA_ERROR_HPP_
