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

// Dense two-phase primal simplex for
//
//   minimize c'x  subject to  A_eq x = b_eq,  A_le x <= b_le,  x >= 0.
//
// Bland's rule throughout, so degenerate problems terminate.

#ifndef BAP_SIMPLEX_H_
#define BAP_SIMPLEX_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "bap/matrix.h"

namespace bap {

struct LinearProgram {
  std::vector<double> cost;
  Matrix a_eq;  // may have zero rows
  std::vector<double> b_eq;
  Matrix a_le;
  std::vector<double> b_le;

  int num_variables() const { return static_cast<int>(cost.size()); }

  // Dimension and finiteness checks.
  absl::Status Validate() const;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

const char* LPStatusName(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<double> x;  // set when optimal
  double objective = 0.0;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  int max_iterations = 1000000;
};

absl::StatusOr<LPSolution> SolveLinearProgram(const LinearProgram& lp,
                                              const SimplexOptions& options = {});

// Largest violation of the constraints (including x >= 0) at x.
double MaxConstraintViolation(const LinearProgram& lp,
                              const std::vector<double>& x);

}  // namespace bap

#endif  // BAP_SIMPLEX_H_
