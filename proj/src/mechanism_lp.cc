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

#include "bap/mechanism_lp.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "bap/evaluate.h"
#include "bap/status_macros.h"

namespace bap {
namespace {

constexpr double kObjectiveAgreement = 1e-8;

std::string PairLabel(const FiniteGame& game, int i, int j) {
  return absl::StrCat("(", game.tables().bob_decisions[i], ",",
                      game.tables().eve_decisions[j], ")");
}

void AppendRow(const MechanismLP& mlp, const double* row, std::string* out) {
  bool first = true;
  for (int v = 0; v < mlp.lp.num_variables(); ++v) {
    if (row[v] == 0.0) continue;
    absl::StrAppendFormat(out, "%s%.17g %s", first ? "" : " + ", row[v],
                          mlp.variable_labels[v]);
    first = false;
  }
  if (first) out->append("0");
}

}  // namespace

absl::StatusOr<MechanismLP> BuildMechanismLP(const FiniteGame& game,
                                             double lambda) {
  RETURN_IF_ERROR(RiskWeights{lambda}.Validate());
  const int nb = game.num_bob_decisions();
  const int ne = game.num_eve_decisions();
  const int nx = game.num_data();
  const int n = nb * ne * nx;
  MechanismLP mlp{LinearProgram{}, game, lambda, {}, {}, {}};
  const Matrix& lb = game.expected_bob_loss();
  const Matrix& le = game.eve_loss();
  const GameTables& t = game.tables();

  mlp.lp.cost.assign(n, 0.0);
  mlp.variable_labels.resize(n);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < ne; ++j) {
      for (int k = 0; k < nx; ++k) {
        const int v = mlp.Index(i, j, k);
        mlp.lp.cost[v] = lb(k, i) - lambda * le(k, j);
        mlp.variable_labels[v] =
            absl::StrCat("rho[", t.bob_decisions[i], ",", t.eve_decisions[j],
                         "|", t.data[k], "]");
      }
    }
  }

  mlp.lp.a_eq = Matrix(nx, n);
  mlp.lp.b_eq = game.prior_predictive();
  for (int k = 0; k < nx; ++k) {
    for (int i = 0; i < nb; ++i) {
      for (int j = 0; j < ne; ++j) mlp.lp.a_eq(k, mlp.Index(i, j, k)) = 1.0;
    }
    mlp.eq_labels.push_back(absl::StrCat("mass[", t.data[k], "]"));
  }

  std::vector<std::vector<double>> rows;
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < ne; ++j) {
      for (int alt = 0; alt < nb; ++alt) {
        if (alt == i) continue;
        std::vector<double> row(n, 0.0);
        for (int k = 0; k < nx; ++k) {
          row[mlp.Index(i, j, k)] = lb(k, i) - lb(k, alt);
        }
        rows.push_back(std::move(row));
        mlp.le_labels.push_back(absl::StrCat("bob", PairLabel(game, i, j),
                                             " vs ", t.bob_decisions[alt]));
      }
      for (int alt = 0; alt < ne; ++alt) {
        if (alt == j) continue;
        std::vector<double> row(n, 0.0);
        for (int k = 0; k < nx; ++k) {
          row[mlp.Index(i, j, k)] = le(k, j) - le(k, alt);
        }
        rows.push_back(std::move(row));
        mlp.le_labels.push_back(absl::StrCat("eve", PairLabel(game, i, j),
                                             " vs ", t.eve_decisions[alt]));
      }
    }
  }
  mlp.lp.a_le = Matrix(static_cast<int>(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int v = 0; v < n; ++v) mlp.lp.a_le(static_cast<int>(r), v) = rows[r][v];
  }
  mlp.lp.b_le.assign(rows.size(), 0.0);
  return mlp;
}

std::string DumpMechanismLP(const MechanismLP& mlp) {
  std::string out = absl::StrFormat(
      "# %d variables, %d equalities, %d inequalities, lambda = %.17g\n",
      mlp.lp.num_variables(), mlp.lp.a_eq.rows(), mlp.lp.a_le.rows(),
      mlp.lambda);
  out.append("minimize: ");
  AppendRow(mlp, mlp.lp.cost.data(), &out);
  out.append("\n");
  for (int r = 0; r < mlp.lp.a_eq.rows(); ++r) {
    absl::StrAppend(&out, mlp.eq_labels[r], ": ");
    AppendRow(mlp, mlp.lp.a_eq.row(r), &out);
    absl::StrAppendFormat(&out, " = %.17g\n", mlp.lp.b_eq[r]);
  }
  for (int r = 0; r < mlp.lp.a_le.rows(); ++r) {
    absl::StrAppend(&out, mlp.le_labels[r], ": ");
    AppendRow(mlp, mlp.lp.a_le.row(r), &out);
    absl::StrAppendFormat(&out, " <= %.17g\n", mlp.lp.b_le[r]);
  }
  return out;
}

absl::StatusOr<FiniteMechanism> DecodeMechanism(
    const MechanismLP& mlp, const std::vector<double>& rho) {
  const FiniteGame& game = mlp.game;
  const int nb = game.num_bob_decisions();
  const int ne = game.num_eve_decisions();
  const int nx = game.num_data();
  if (static_cast<int>(rho.size()) != mlp.lp.num_variables()) {
    return absl::InvalidArgumentError("solution has the wrong length");
  }
  std::vector<std::string> releases;
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < ne; ++j) releases.push_back(PairLabel(game, i, j));
  }
  Matrix kernel(nx, nb * ne);
  for (int k = 0; k < nx; ++k) {
    double total = 0.0;
    for (int i = 0; i < nb; ++i) {
      for (int j = 0; j < ne; ++j) {
        const double v = std::max(0.0, rho[mlp.Index(i, j, k)]);
        kernel(k, i * ne + j) = v;
        total += v;
      }
    }
    if (game.prior_predictive()[k] > 0.0 && total > 0.0) {
      for (int c = 0; c < nb * ne; ++c) kernel(k, c) /= total;
    } else {
      for (int c = 0; c < nb * ne; ++c) kernel(k, c) = c == 0 ? 1.0 : 0.0;
    }
  }
  return FiniteMechanism::Create(std::move(releases), std::move(kernel));
}

absl::StatusOr<OptimalMechanism> SolveOptimalMechanism(const FiniteGame& game,
                                                       double lambda) {
  ASSIGN_OR_RETURN(MechanismLP mlp, BuildMechanismLP(game, lambda));
  ASSIGN_OR_RETURN(LPSolution solution, SolveLinearProgram(mlp.lp));
  if (solution.status != LPStatus::kOptimal) {
    return absl::InternalError(absl::StrCat("mechanism LP is ",
                                            LPStatusName(solution.status)));
  }
  ASSIGN_OR_RETURN(FiniteMechanism mechanism, DecodeMechanism(mlp, solution.x));
  ASSIGN_OR_RETURN(RiskTriple risks,
                   EvaluateMechanism(game, mechanism, RiskWeights{lambda}));
  if (std::abs(risks.r_a - solution.objective) > kObjectiveAgreement) {
    return absl::InternalError(absl::StrFormat(
        "decoded mechanism has R_A = %.17g but the LP objective is %.17g",
        risks.r_a, solution.objective));
  }
  return OptimalMechanism{std::move(mechanism), risks, solution.objective,
                          std::move(solution.x)};
}

}  // namespace bap
