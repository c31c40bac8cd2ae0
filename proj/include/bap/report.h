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

// CSV and JSON serialization of risk tables and run reports.

#ifndef BAP_REPORT_H_
#define BAP_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "bap/gaussian_study.h"
#include "json.hpp"

namespace bap {

std::string_view BapVersion();

// Shortest form that parses back to the same double.
std::string FormatDouble(double x);

struct ReportRow {
  std::string mechanism;
  std::optional<double> param;  // absent for non-parametric rows
  double r_b = 0.0;
  double r_e = 0.0;
  double r_a = 0.0;
  double se_b = 0.0;
  double se_e = 0.0;
  std::string method;

  bool operator==(const ReportRow&) const = default;
};

ReportRow MakeReportRow(std::string mechanism, std::optional<double> param,
                        const GaussianRisks& risks, const RiskTriple& triple);
ReportRow MakeReportRow(const SweepRow& row, MechanismKind kind);
ReportRow MakeReportRow(const TableRow& row);
// Deterministic finite-game rows carry zero standard errors.
ReportRow MakeReportRow(std::string mechanism, std::optional<double> param,
                        const RiskTriple& triple);

// Header: param,R_B,R_E,R_A,se_B,se_E,method
std::string SweepCsv(const std::vector<ReportRow>& rows);
// Header: mechanism,param,R_B,R_E,R_A,se_B,se_E,method
std::string TableCsv(const std::vector<ReportRow>& rows);
// Fixed-width view rounded to two decimals.
std::string TableText(const std::vector<ReportRow>& rows, double lambda);

struct RunReport {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  double lambda = 0.0;
  std::vector<ReportRow> rows;
  uint64_t seed = 0;
  int64_t duration_ms = 0;
  std::string version;

  bool operator==(const RunReport&) const = default;
};

nlohmann::json ReportToJson(const RunReport& report);
absl::StatusOr<RunReport> ReportFromJson(const nlohmann::json& doc);

nlohmann::json ModelToJson(const GaussianModel& model);
nlohmann::json ConfigToJson(const NumericsConfig& cfg);

// Writes to a sibling temporary file and renames it over `path`.
absl::Status WriteFileAtomically(const std::string& path,
                                 std::string_view contents);

}  // namespace bap

#endif  // BAP_REPORT_H_
