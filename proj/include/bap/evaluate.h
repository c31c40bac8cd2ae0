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

#ifndef BAP_EVALUATE_H_
#define BAP_EVALUATE_H_

#include <vector>

#include "absl/status/statusor.h"
#include "bap/finite_game.h"
#include "bap/matrix.h"

namespace bap {

// p(x | eta, q) for release index `eta`. FailedPrecondition when the release
// has zero marginal probability.
absl::StatusOr<std::vector<double>> PosteriorOverData(
    const FiniteGame& game, const FiniteMechanism& mech, int eta);

struct BayesDecision {
  int index = 0;
  double expected_loss = 0.0;
};

// Minimizes sum_s loss(s, d) posterior(s) over columns d of `loss`.
// Ties go to the lowest index.
absl::StatusOr<BayesDecision> ChooseBayesDecision(
    const std::vector<double>& posterior, const Matrix& loss);

struct MechanismEvaluation {
  RiskTriple risks;
  std::vector<double> release_mass;  // q(eta)
  // Chosen decision per release; -1 for zero-mass releases.
  std::vector<int> bob_decision;
  std::vector<int> eve_decision;
};

absl::StatusOr<MechanismEvaluation> EvaluateMechanismDetailed(
    const FiniteGame& game, const FiniteMechanism& mech,
    const RiskWeights& weights);

absl::StatusOr<RiskTriple> EvaluateMechanism(const FiniteGame& game,
                                             const FiniteMechanism& mech,
                                             const RiskWeights& weights);

// lambda placing the full and null releases at equal R_A. The lambda fields
// of the inputs are ignored.
absl::StatusOr<double> CalibrateLambda(const RiskTriple& full,
                                       const RiskTriple& null);

}  // namespace bap

#endif  // BAP_EVALUATE_H_
