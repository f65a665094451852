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

#ifndef LSSPA_REPORT_HPP_
#define LSSPA_REPORT_HPP_

#include <string>
#include <vector>

#include "lsspa/pipeline.hpp"

namespace lsspa {

inline constexpr const char* kReportSchemaVersion = "1.0";

struct ReportDocument {
  std::string schema_version = kReportSchemaVersion;
  std::vector<std::string> feature_names;
  AttributionResult result;
  RunConfig config;
  double wall_time_seconds = 0.0;
};

// JSON report. Key order is fixed and every floating-point value is
// printed with 17 significant digits, so two runs with the same inputs and
// seed differ only in "wall_time_seconds". Non-finite values become null.
std::string RenderReportJson(const ReportDocument& report);

// Header: batch_index,samples,sigma_hat,S_1..S_p; one row per batch.
std::string RenderHistoryCsv(const AttributionResult& result);

}  // namespace lsspa

#endif  // LSSPA_REPORT_HPP_
