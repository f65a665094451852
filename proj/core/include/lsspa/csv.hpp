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

#ifndef LSSPA_CSV_HPP_
#define LSSPA_CSV_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsspa/dataset.hpp"

namespace lsspa {

// Numeric CSV: comma separated, one header row, '.' decimal point, no
// quoting. Every data row must have as many fields as the header.
struct CsvTable {
  std::vector<std::string> header;
  Matrix values;
};

CsvTable ParseCsv(std::string_view text);
CsvTable ReadCsv(const std::filesystem::path& path);

struct LabeledDataset {
  Dataset data;
  std::vector<std::string> feature_names;
  std::string target_name;
};

// Splits off the target column: `target` names a header entry; nullopt or
// "last" selects the final column.
LabeledDataset SplitTarget(const CsvTable& table,
                           const std::optional<std::string>& target);

// %.17g formatting; enough digits for a bit-exact round trip.
std::string FormatNumber(double value);

std::string FormatCsv(const std::vector<std::string>& header,
                      const Matrix& values);

// Features first, target last.
std::string FormatDatasetCsv(const Dataset& data,
                             const std::vector<std::string>& feature_names,
                             const std::string& target_name);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);

std::vector<std::string> DefaultFeatureNames(std::size_t p);

}  // namespace lsspa

#endif  // LSSPA_CSV_HPP_
