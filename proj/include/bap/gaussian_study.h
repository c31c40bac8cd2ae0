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

// Parameter sweeps, grid optimization and calibrated comparison tables for
// the Gaussian game.

#ifndef BAP_GAUSSIAN_STUDY_H_
#define BAP_GAUSSIAN_STUDY_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "bap/gaussian_model.h"
#include "bap/gaussian_risk.h"

namespace bap {

// 0 followed by 60 log-spaced points in [0.01, 3].
std::vector<double> DefaultSigmaGrid();
// 61 uniform points in [0.01, 0.99].
std::vector<double> DefaultTauGrid();
std::vector<double> DefaultGrid(MechanismKind kind);

// Rejects non-parametric kinds, empty or non-increasing grids and values
// outside the family's parameter range.
absl::Status ValidateGrid(MechanismKind kind, const std::vector<double>& grid);

struct SweepRow {
  double param = 0.0;
  GaussianRisks risks;
  RiskTriple triple;
};

// Rows are evaluated on up to `threads` worker threads (0 = hardware
// concurrency); output does not depend on the thread count.
absl::StatusOr<std::vector<SweepRow>> Sweep(const GaussianEvaluator& eval,
                                            MechanismKind kind,
                                            const std::vector<double>& grid,
                                            AdversaryTarget target,
                                            double lambda, int threads = 1);

// Smallest R_A; ties go to the smaller parameter.
const SweepRow& ArgminRow(const std::vector<SweepRow>& rows);

absl::StatusOr<SweepRow> OptimizeParam(const GaussianEvaluator& eval,
                                       MechanismKind kind,
                                       const std::vector<double>& grid,
                                       AdversaryTarget target, double lambda,
                                       int threads = 1);

struct TableRow {
  GaussianMechanism mechanism;
  GaussianRisks risks;
  RiskTriple triple;
};

struct GaussianTable {
  AdversaryTarget target = AdversaryTarget::kMean;
  double lambda = 0.0;
  // Full, Null, then the optimized noisy full, noisy mean, noisy median and
  // one-bit rows.
  std::vector<TableRow> rows;
};

struct TableGrids {
  std::vector<double> sigma = DefaultSigmaGrid();
  std::vector<double> tau = DefaultTauGrid();
};

absl::StatusOr<GaussianTable> BuildTable(const GaussianEvaluator& eval,
                                         AdversaryTarget target,
                                         const TableGrids& grids = {},
                                         int threads = 1);

}  // namespace bap

#endif  // BAP_GAUSSIAN_STUDY_H_
