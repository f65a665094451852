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

#include "lsspa/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lsspa/error.hpp"

namespace lsspa {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      return fields;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double ParseNumber(std::string_view field, std::size_t line_no,
                   std::size_t column) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size() ||
      field.empty()) {
    Fail(ErrorKind::kInvalidInput,
         "CSV line " + std::to_string(line_no) + ", column " +
             std::to_string(column + 1) + ": '" + std::string(field) +
             "' is not a number");
  }
  return value;
}

}  // namespace

CsvTable ParseCsv(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }
  CsvTable table;
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  bool have_header = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    const auto fields = SplitFields(line);
    if (!have_header) {
      for (auto f : fields) table.header.emplace_back(f);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      Fail(ErrorKind::kInvalidInput,
           "CSV line " + std::to_string(line_no) + " has " +
               std::to_string(fields.size()) + " fields, header has " +
               std::to_string(table.header.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      values.push_back(ParseNumber(fields[c], line_no, c));
    }
    ++rows;
  }
  if (!have_header) {
    Fail(ErrorKind::kInvalidInput, "CSV input is empty (header row required)");
  }

  const auto cols = static_cast<Eigen::Index>(table.header.size());
  table.values = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                                Eigen::Dynamic, Eigen::RowMajor>>(
      values.data(), static_cast<Eigen::Index>(rows), cols);
  return table;
}

CsvTable ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Fail(ErrorKind::kInvalidInput, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseCsv(buffer.str());
}

LabeledDataset SplitTarget(const CsvTable& table,
                           const std::optional<std::string>& target) {
  const std::size_t cols = table.header.size();
  if (cols < 2) {
    Fail(ErrorKind::kInvalidInput,
         "CSV needs at least one feature column and a target column");
  }
  std::size_t target_col = cols - 1;
  if (target && *target != "last") {
    bool found = false;
    for (std::size_t c = 0; c < cols; ++c) {
      if (table.header[c] == *target) {
        target_col = c;
        found = true;
        break;
      }
    }
    if (!found) {
      Fail(ErrorKind::kInvalidInput,
           "target column '" + *target + "' not found in header");
    }
  }

  LabeledDataset out;
  out.target_name = table.header[target_col];
  const Eigen::Index rows = table.values.rows();
  out.data.X.resize(rows, static_cast<Eigen::Index>(cols - 1));
  Eigen::Index dst = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (c == target_col) continue;
    out.data.X.col(dst++) = table.values.col(static_cast<Eigen::Index>(c));
    out.feature_names.push_back(table.header[c]);
  }
  out.data.y = table.values.col(static_cast<Eigen::Index>(target_col));
  return out;
}

std::string FormatNumber(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string FormatCsv(const std::vector<std::string>& header,
                      const Matrix& values) {
  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out += ',';
    out += header[c];
  }
  out += '\n';
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      if (c) out += ',';
      out += FormatNumber(values(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string FormatDatasetCsv(const Dataset& data,
                             const std::vector<std::string>& feature_names,
                             const std::string& target_name) {
  if (feature_names.size() != data.features()) {
    Fail(ErrorKind::kInvalidInput, "feature name count does not match data");
  }
  std::vector<std::string> header = feature_names;
  header.push_back(target_name);
  Matrix joined(data.X.rows(), data.X.cols() + 1);
  joined << data.X, data.y;
  return FormatCsv(header, joined);
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      Fail(ErrorKind::kInvalidInput, "cannot write '" + tmp.string() + "'");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      Fail(ErrorKind::kInvalidInput, "write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    Fail(ErrorKind::kInvalidInput, "cannot rename onto '" + path.string() + "'");
  }
}

std::vector<std::string> DefaultFeatureNames(std::size_t p) {
  std::vector<std::string> names;
  names.reserve(p);
  for (std::size_t j = 1; j <= p; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

}  // namespace lsspa
