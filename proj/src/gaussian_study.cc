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

#include "bap/gaussian_study.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "absl/strings/str_format.h"
#include "bap/evaluate.h"
#include "bap/status_macros.h"

namespace bap {

std::vector<double> DefaultSigmaGrid() {
  std::vector<double> grid = {0.0};
  const double lo = std::log(0.01);
  const double hi = std::log(3.0);
  for (int i = 0; i < 60; ++i) {
    grid.push_back(std::exp(lo + (hi - lo) * i / 59.0));
  }
  grid.back() = 3.0;
  return grid;
}

std::vector<double> DefaultTauGrid() {
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(0.01 + 0.98 * i / 60.0);
  grid.back() = 0.99;
  return grid;
}

std::vector<double> DefaultGrid(MechanismKind kind) {
  return kind == MechanismKind::kOneBit ? DefaultTauGrid()
                                        : DefaultSigmaGrid();
}

absl::Status ValidateGrid(MechanismKind kind,
                          const std::vector<double>& grid) {
  if (!IsParametric(kind)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "mechanism '%s' has no parameter to sweep; valid values: noisy-full, "
        "noisy-mean, noisy-median, one-bit",
        std::string(MechanismName(kind))));
  }
  if (grid.empty()) return absl::InvalidArgumentError("grid is empty");
  for (size_t i = 0; i < grid.size(); ++i) {
    RETURN_IF_ERROR((GaussianMechanism{kind, grid[i]}.Validate()));
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "grid must be strictly increasing: grid[%d] = %g follows %g", i,
          grid[i], grid[i - 1]));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<SweepRow>> Sweep(const GaussianEvaluator& eval,
                                            MechanismKind kind,
                                            const std::vector<double>& grid,
                                            AdversaryTarget target,
                                            double lambda, int threads) {
  RETURN_IF_ERROR(ValidateGrid(kind, grid));
  RETURN_IF_ERROR(RiskWeights{lambda}.Validate());
  const int size = static_cast<int>(grid.size());
  std::vector<SweepRow> rows(size);
  std::vector<absl::Status> status(size);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < size; i = next++) {
      const GaussianMechanism mech{kind, grid[i]};
      absl::StatusOr<GaussianRisks> risks = eval.Evaluate(mech, target);
      if (!risks.ok()) {
        status[i] = risks.status();
        continue;
      }
      rows[i] = {grid[i], *risks, risks->Triple(lambda)};
    }
  };
  if (threads <= 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, size);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  for (const absl::Status& s : status) RETURN_IF_ERROR(s);
  return rows;
}

const SweepRow& ArgminRow(const std::vector<SweepRow>& rows) {
  size_t best = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].triple.r_a < rows[best].triple.r_a) best = i;
  }
  return rows[best];
}

absl::StatusOr<SweepRow> OptimizeParam(const GaussianEvaluator& eval,
                                       MechanismKind kind,
                                       const std::vector<double>& grid,
                                       AdversaryTarget target, double lambda,
                                       int threads) {
  ASSIGN_OR_RETURN(std::vector<SweepRow> rows,
                   Sweep(eval, kind, grid, target, lambda, threads));
  return ArgminRow(rows);
}

absl::StatusOr<GaussianTable> BuildTable(const GaussianEvaluator& eval,
                                         AdversaryTarget target,
                                         const TableGrids& grids,
                                         int threads) {
  GaussianTable table;
  table.target = target;
  ASSIGN_OR_RETURN(GaussianRisks full,
                   eval.Evaluate(GaussianMechanism::Full(), target));
  ASSIGN_OR_RETURN(GaussianRisks null,
                   eval.Evaluate(GaussianMechanism::Null(), target));
  ASSIGN_OR_RETURN(table.lambda,
                   CalibrateLambda(full.Triple(0.0), null.Triple(0.0)));
  const double lambda = table.lambda;
  table.rows.push_back(
      {GaussianMechanism::Full(), full, full.Triple(lambda)});
  table.rows.push_back(
      {GaussianMechanism::Null(), null, null.Triple(lambda)});
  for (MechanismKind kind :
       {MechanismKind::kNoisyFull, MechanismKind::kNoisyMean,
        MechanismKind::kNoisyMedian, MechanismKind::kOneBit}) {
    const std::vector<double>& grid =
        kind == MechanismKind::kOneBit ? grids.tau : grids.sigma;
    ASSIGN_OR_RETURN(SweepRow best,
                     OptimizeParam(eval, kind, grid, target, lambda, threads));
    table.rows.push_back({{kind, best.param}, best.risks, best.triple});
  }
  return table;
}

}  // namespace bap
