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

#include "lsspa/error.hpp"

#include <sstream>

namespace lsspa {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid input";
    case ErrorKind::kInvalidConfig:
      return "invalid configuration";
    case ErrorKind::kRankDeficient:
      return "rank deficient";
    case ErrorKind::kConditioning:
      return "ill conditioned";
    case ErrorKind::kUndefinedMetric:
      return "undefined metric";
    case ErrorKind::kInsufficientSamples:
      return "insufficient samples";
    case ErrorKind::kNumerical:
      return "numerical failure";
    case ErrorKind::kUnsupportedDimension:
      return "unsupported dimension";
    case ErrorKind::kTooLarge:
      return "problem too large";
  }
  return "unknown";
}

bool IsNumericalFailure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kRankDeficient:
    case ErrorKind::kConditioning:
    case ErrorKind::kUndefinedMetric:
    case ErrorKind::kNumerical:
      return true;
    default:
      return false;
  }
}

namespace {

std::string RankMessage(std::size_t column, double ratio) {
  std::ostringstream out;
  out << "feature matrix is rank deficient: column " << column
      << " (0-based) has relative pivot " << ratio;
  return out.str();
}

}  // namespace

RankDeficientError::RankDeficientError(std::size_t column, double ratio)
    : Error(ErrorKind::kRankDeficient, RankMessage(column, ratio)),
      column_(column) {}

}  // namespace lsspa
