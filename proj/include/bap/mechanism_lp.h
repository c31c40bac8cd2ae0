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

// Optimal mechanisms for finite games. A release is a recommended decision
// pair (i, j) for (Bob, Eve); the unknowns are the joint masses
// rho[i][j][k] = P(release (i, j), X = k). Optimality constraints force each
// agent's recommended decision to be a Bayes decision given the release.

#ifndef BAP_MECHANISM_LP_H_
#define BAP_MECHANISM_LP_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "bap/finite_game.h"
#include "bap/simplex.h"

namespace bap {

struct MechanismLP {
  LinearProgram lp;
  FiniteGame game;
  double lambda = 0.0;
  std::vector<std::string> variable_labels;
  std::vector<std::string> eq_labels;
  std::vector<std::string> le_labels;

  int Index(int i, int j, int k) const {
    return (i * game.num_eve_decisions() + j) * game.num_data() + k;
  }
};

absl::StatusOr<MechanismLP> BuildMechanismLP(const FiniteGame& game,
                                             double lambda);

// Human-readable listing: cost row, then one labelled line per constraint.
std::string DumpMechanismLP(const MechanismLP& mlp);

struct OptimalMechanism {
  FiniteMechanism mechanism;  // releases are "(bob,eve)" decision pairs
  RiskTriple risks;           // recomputed by exact evaluation
  double lp_objective = 0.0;
  std::vector<double> rho;
};

// Fails with Internal if the decoded mechanism's evaluated R_A disagrees with
// the LP objective by more than 1e-8.
absl::StatusOr<OptimalMechanism> SolveOptimalMechanism(const FiniteGame& game,
                                                       double lambda);

// q(release | x) = rho / p(x); rows with p(x) = 0 put all mass on the first
// pair.
absl::StatusOr<FiniteMechanism> DecodeMechanism(const MechanismLP& mlp,
                                                const std::vector<double>& rho);

}  // namespace bap

#endif  // BAP_MECHANISM_LP_H_
