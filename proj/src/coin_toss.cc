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

#include "bap/coin_toss.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "bap/evaluate.h"
#include "bap/mechanism_lp.h"
#include "bap/status_macros.h"

namespace bap {
namespace {

constexpr double kLowerEveThreshold = 3.0 / 13.0;
constexpr double kUpperEveThreshold = 10.0 / 13.0;

absl::Status CheckOmega(double omega) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("omega must lie in [0, 1], got %g", omega));
  }
  return absl::OkStatus();
}

}  // namespace

FiniteGame CoinGame() {
  GameTables t;
  t.parameters = {"0", "1/2"};
  t.prior = {0.5, 0.5};
  t.data = {"0", "1"};
  t.likelihood = Matrix::FromRows({{1.0, 0.0}, {0.5, 0.5}}).value();
  t.bob_decisions = {"0", "1/2"};
  t.eve_decisions = {"0", "1"};
  t.bob_loss = Matrix::FromRows({{0.0, 1.0}, {1.0, 0.0}}).value();
  t.eve_loss = Matrix::FromRows({{0.0, 1.0}, {10.0, 0.0}}).value();
  return FiniteGame::Create(std::move(t)).value();
}

absl::StatusOr<FiniteMechanism> RandomizedResponseMechanism(double omega) {
  RETURN_IF_ERROR(CheckOmega(omega));
  ASSIGN_OR_RETURN(
      Matrix kernel,
      Matrix::FromRows({{1.0 - omega, omega}, {omega, 1.0 - omega}}));
  return FiniteMechanism::Create({"0", "1"}, std::move(kernel));
}

double RrBobDecision(int eta, double omega) {
  const bool fair = (eta == 1 && omega >= 0.5) || (eta == 0 && omega < 0.5);
  return fair ? 0.5 : 0.0;
}

int RrEveDecision(int eta, double omega) {
  const bool alarm = (eta == 1 && omega >= kLowerEveThreshold) ||
                     (eta == 0 && omega <= kUpperEveThreshold);
  return alarm ? 1 : 0;
}

absl::StatusOr<RrRisks> RandomizedResponseRisks(double omega) {
  RETURN_IF_ERROR(CheckOmega(omega));
  RrRisks out;
  out.r_b = 0.25 + 0.5 * std::min(omega, 1.0 - omega);
  if (omega < kLowerEveThreshold) {
    out.r_e = 13.0 * omega / 4.0;
  } else if (omega <= kUpperEveThreshold) {
    out.r_e = 0.75;
  } else {
    out.r_e = 13.0 * (1.0 - omega) / 4.0;
  }
  return out;
}

absl::StatusOr<RrOptimum> RandomizedResponseOptimum(double lambda) {
  RETURN_IF_ERROR(RiskWeights{lambda}.Validate());
  // R_A is piecewise affine with candidate minima at 0 and 3/13 (and their
  // mirror images, which give the same value).
  const double at_full = 0.25;
  const double at_plateau = 19.0 / 52.0 - 0.75 * lambda;
  if (lambda <= 2.0 / 13.0) return RrOptimum{0.0, at_full};
  return RrOptimum{kLowerEveThreshold, at_plateau};
}

absl::StatusOr<std::vector<CoinTableRow>> CoinTossTable(double lambda) {
  const FiniteGame game = CoinGame();
  const RiskWeights weights{lambda};
  RETURN_IF_ERROR(weights.Validate());
  std::vector<CoinTableRow> rows;
  ASSIGN_OR_RETURN(RiskTriple full,
                   EvaluateMechanism(game, FiniteMechanism::Full(game), weights));
  rows.push_back({"Full", full, 0.0});
  ASSIGN_OR_RETURN(RiskTriple null,
                   EvaluateMechanism(game, FiniteMechanism::Null(game), weights));
  rows.push_back({"Null", null, 0.0});
  ASSIGN_OR_RETURN(RrOptimum best, RandomizedResponseOptimum(lambda));
  ASSIGN_OR_RETURN(RrRisks rr, RandomizedResponseRisks(best.omega));
  rows.push_back(
      {"Randomized response", MakeRiskTriple(rr.r_b, rr.r_e, lambda),
       best.omega});
  ASSIGN_OR_RETURN(OptimalMechanism lp, SolveOptimalMechanism(game, lambda));
  rows.push_back({"Linear program", lp.risks, 0.0});
  return rows;
}

absl::StatusOr<CoinSweep> CoinTossSweep(const std::vector<double>& omega,
                                        double lambda) {
  if (omega.empty()) return absl::InvalidArgumentError("omega grid is empty");
  ASSIGN_OR_RETURN(std::vector<CoinTableRow> table, CoinTossTable(lambda));
  CoinSweep out;
  out.lambda = lambda;
  out.full_level = table[0].risks.r_a;
  out.null_level = table[1].risks.r_a;
  out.lp_optimum = table[3].risks.r_a;
  for (double w : omega) {
    ASSIGN_OR_RETURN(RrRisks rr, RandomizedResponseRisks(w));
    out.omega.push_back(w);
    out.rows.push_back(MakeRiskTriple(rr.r_b, rr.r_e, lambda));
  }
  return out;
}

}  // namespace bap
