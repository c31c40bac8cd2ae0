// Copyright 2026 The BAP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bap/report.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>
#include <utility>

#include "absl/strings/str_format.h"

#ifndef BAP_VERSION
#define BAP_VERSION "0.0.0"
#endif

namespace bap {
namespace {

using nlohmann::json;

void AppendNumbers(std::string& out, const ReportRow& row) {
  out += row.param ? FormatDouble(*row.param) : "";
  for (double v : {row.r_b, row.r_e, row.r_a, row.se_b, row.se_e}) {
    out += ',';
    out += FormatDouble(v);
  }
  out += ',';
  out += row.method;
  out += '\n';
}

}  // namespace

std::string_view BapVersion() { return BAP_VERSION; }

std::string FormatDouble(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return absl::StrFormat("%.17g", x);
  return std::string(buf, end);
}

ReportRow MakeReportRow(std::string mechanism, std::optional<double> param,
                        const GaussianRisks& risks, const RiskTriple& triple) {
  ReportRow row;
  row.mechanism = std::move(mechanism);
  row.param = param;
  row.r_b = triple.r_b;
  row.r_e = triple.r_e;
  row.r_a = triple.r_a;
  row.se_b = risks.bob.std_error;
  row.se_e = risks.eve.std_error;
  row.method = std::string(EvalMethodName(risks.method()));
  return row;
}

ReportRow MakeReportRow(const SweepRow& row, MechanismKind kind) {
  return MakeReportRow(std::string(MechanismName(kind)), row.param, row.risks,
                       row.triple);
}

ReportRow MakeReportRow(const TableRow& row) {
  const MechanismKind kind = row.mechanism.kind;
  std::optional<double> param;
  if (IsParametric(kind)) param = row.mechanism.parameter;
  return MakeReportRow(std::string(MechanismName(kind)), param, row.risks,
                       row.triple);
}

ReportRow MakeReportRow(std::string mechanism, std::optional<double> param,
                        const RiskTriple& triple) {
  ReportRow row;
  row.mechanism = std::move(mechanism);
  row.param = param;
  row.r_b = triple.r_b;
  row.r_e = triple.r_e;
  row.r_a = triple.r_a;
  row.method = std::string(EvalMethodName(EvalMethod::kClosedForm));
  return row;
}

std::string SweepCsv(const std::vector<ReportRow>& rows) {
  std::string out = "param,R_B,R_E,R_A,se_B,se_E,method\n";
  for (const ReportRow& row : rows) AppendNumbers(out, row);
  return out;
}

std::string TableCsv(const std::vector<ReportRow>& rows) {
  std::string out = "mechanism,param,R_B,R_E,R_A,se_B,se_E,method\n";
  for (const ReportRow& row : rows) {
    out += row.mechanism;
    out += ',';
    AppendNumbers(out, row);
  }
  return out;
}

std::string TableText(const std::vector<ReportRow>& rows, double lambda) {
  std::string out = absl::StrFormat("lambda = %.4f\n", lambda);
  out += absl::StrFormat("%-28s %6s %6s %6s\n", "mechanism", "R_B", "R_E",
                         "R_A");
  for (const ReportRow& row : rows) {
    std::string label = row.mechanism;
    if (row.param) label += absl::StrFormat(" (%.2f)", *row.param);
    out += absl::StrFormat("%-28s %6.2f %6.2f %6.2f\n", label, row.r_b,
                           row.r_e, row.r_a);
  }
  return out;
}

json ReportToJson(const RunReport& report) {
  json rows = json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back({{"mechanism", row.mechanism},
                    {"param", row.param ? json(*row.param) : json(nullptr)},
                    {"R_B", row.r_b},
                    {"R_E", row.r_e},
                    {"R_A", row.r_a},
                    {"se_B", row.se_b},
                    {"se_E", row.se_e},
                    {"method", row.method}});
  }
  return {{"command", report.command},
          {"config", report.config},
          {"lambda", report.lambda},
          {"rows", std::move(rows)},
          {"seed", report.seed},
          {"duration_ms", report.duration_ms},
          {"version", report.version}};
}

absl::StatusOr<RunReport> ReportFromJson(const json& doc) {
  try {
    RunReport report;
    report.command = doc.at("command").get<std::string>();
    report.config = doc.at("config");
    report.lambda = doc.at("lambda").get<double>();
    report.seed = doc.at("seed").get<uint64_t>();
    report.duration_ms = doc.at("duration_ms").get<int64_t>();
    report.version = doc.at("version").get<std::string>();
    for (const json& r : doc.at("rows")) {
      ReportRow row;
      row.mechanism = r.at("mechanism").get<std::string>();
      if (!r.at("param").is_null()) row.param = r.at("param").get<double>();
      row.r_b = r.at("R_B").get<double>();
      row.r_e = r.at("R_E").get<double>();
      row.r_a = r.at("R_A").get<double>();
      row.se_b = r.at("se_B").get<double>();
      row.se_e = r.at("se_E").get<double>();
      row.method = r.at("method").get<std::string>();
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrFormat("malformed report: %s", e.what()));
  }
}

json ModelToJson(const GaussianModel& model) {
  return {{"n", model.n},
          {"sigma0", model.sigma0},
          {"c_b", model.c_b},
          {"c_e", model.c_e}};
}

json ConfigToJson(const NumericsConfig& cfg) {
  return {{"quad_order", cfg.quad_order},
          {"inner_quad_order", cfg.inner_quad_order},
          {"mc_samples", cfg.mc_samples},
          {"seed", cfg.seed},
          {"bins", cfg.bins},
          {"range_multiplier", cfg.range_multiplier},
          {"alpha", cfg.alpha}};
}

absl::Status WriteFileAtomically(const std::string& path,
                                 std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      return absl::UnavailableError(
          absl::StrFormat("cannot open %s for writing", tmp));
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      return absl::DataLossError(absl::StrFormat("failed writing %s", tmp));
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    return absl::UnavailableError(absl::StrFormat(
        "cannot rename %s to %s: %s", tmp, path, ec.message()));
  }
  return absl::OkStatus();
}

}  // namespace bap
