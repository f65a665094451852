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

#include "lsspa/report.hpp"

#include <cmath>
#include <cstdint>

#include "json.hpp"
#include "lsspa/csv.hpp"
#include "lsspa/error.hpp"

namespace lsspa {
namespace {

using Json = nlohmann::ordered_json;

Json ToJson(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json ConfigJson(const RunConfig& config) {
  Json out;
  out["max_permutations"] = config.max_permutations;
  out["batch_size"] = config.batch_size;
  out["tolerance"] = config.tolerance;
  out["quantile"] = config.quantile;
  out["risk_draws"] = config.risk_draws;
  out["sampler"] = {
      {"kind", std::string(SamplerKindName(config.sampler.kind))},
      {"seed", config.sampler.seed},
      {"antithetical", config.sampler.antithetical},
  };
  out["ridge_lambda"] =
      config.ridge_lambda ? Json(*config.ridge_lambda) : Json(nullptr);
  out["center"] = config.center;
  out["reduction_path"] = std::string(ReductionPathName(config.reduction_path));
  out["cholesky_block_rows"] = config.cholesky_block_rows;
  out["seed"] = config.seed;
  return out;
}

// nlohmann::json prints the shortest round-trip form; reports use a fixed
// 17 significant digits instead so diffs are stable across libraries.
void Emit(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(key).dump() + ": ";
        Emit(value, indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        Emit(j[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? FormatNumber(v) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string RenderReportJson(const ReportDocument& report) {
  const AttributionResult& r = report.result;
  const auto p = static_cast<std::size_t>(r.shapley.size());
  if (report.feature_names.size() != p ||
      static_cast<std::size_t>(r.per_feature_error.size()) != p) {
    Fail(ErrorKind::kInvalidInput,
         "report fields disagree on the number of features");
  }

  Json doc;
  doc["schema_version"] = report.schema_version;
  doc["p"] = p;
  doc["feature_names"] = report.feature_names;
  doc["shapley"] = ToJson(r.shapley);
  doc["per_feature_error"] = ToJson(r.per_feature_error);
  doc["overall_error"] = r.overall_error;
  doc["r2_full"] = r.r2_full;
  doc["converged"] = r.converged;
  doc["batches_used"] = r.batches_used;
  doc["total_lift_vectors"] = r.total_lift_vectors;
  doc["intercept"] = r.intercept ? Json(*r.intercept) : Json(nullptr);
  doc["config_echo"] = ConfigJson(report.config);
  doc["wall_time_seconds"] = report.wall_time_seconds;

  std::string out;
  Emit(doc, 0, out);
  out += '\n';
  return out;
}

std::string RenderHistoryCsv(const AttributionResult& result) {
  const Eigen::Index p = result.shapley.size();
  std::string out = "batch_index,samples,sigma_hat";
  for (Eigen::Index j = 1; j <= p; ++j) out += ",S_" + std::to_string(j);
  out += '\n';
  for (const HistoryEntry& h : result.history) {
    out += std::to_string(h.batch_index) + ',' + std::to_string(h.samples) +
           ',' + FormatNumber(h.sigma_hat);
    for (Eigen::Index j = 0; j < h.s_hat.size(); ++j) {
      out += ',' + FormatNumber(h.s_hat(j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace lsspa
