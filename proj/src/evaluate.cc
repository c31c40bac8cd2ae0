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

#include "bap/evaluate.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "bap/status_macros.h"

namespace bap {
namespace {

absl::Status CheckCompatible(const FiniteGame& game,
                             const FiniteMechanism& mech) {
  if (mech.kernel().rows() != game.num_data()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "mechanism kernel has %d rows but the game has %d data values",
        mech.kernel().rows(), game.num_data()));
  }
  return absl::OkStatus();
}

double ReleaseMass(const FiniteGame& game, const FiniteMechanism& mech,
                   int eta) {
  double mass = 0.0;
  for (int x = 0; x < game.num_data(); ++x) {
    mass += mech.q(x, eta) * game.prior_predictive()[x];
  }
  return mass;
}

}  // namespace

absl::StatusOr<std::vector<double>> PosteriorOverData(
    const FiniteGame& game, const FiniteMechanism& mech, int eta) {
  RETURN_IF_ERROR(CheckCompatible(game, mech));
  if (eta < 0 || eta >= mech.num_releases()) {
    return absl::OutOfRangeError(
        absl::StrFormat("release index %d out of range", eta));
  }
  const double mass = ReleaseMass(game, mech, eta);
  if (!(mass > 0.0)) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "release '%s' has zero marginal probability", mech.releases()[eta]));
  }
  std::vector<double> posterior(game.num_data());
  for (int x = 0; x < game.num_data(); ++x) {
    posterior[x] = mech.q(x, eta) * game.prior_predictive()[x] / mass;
  }
  return posterior;
}

absl::StatusOr<BayesDecision> ChooseBayesDecision(
    const std::vector<double>& posterior, const Matrix& loss) {
  if (loss.cols() == 0) {
    return absl::InvalidArgumentError("decision set is empty");
  }
  if (loss.rows() != static_cast<int>(posterior.size())) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "loss table has %d rows, posterior has %d states", loss.rows(),
        posterior.size()));
  }
  BayesDecision best{-1, 0.0};
  for (int d = 0; d < loss.cols(); ++d) {
    double value = 0.0;
    for (int s = 0; s < loss.rows(); ++s) value += loss(s, d) * posterior[s];
    if (best.index < 0 || value < best.expected_loss) best = {d, value};
  }
  return best;
}

absl::StatusOr<MechanismEvaluation> EvaluateMechanismDetailed(
    const FiniteGame& game, const FiniteMechanism& mech,
    const RiskWeights& weights) {
  RETURN_IF_ERROR(weights.Validate());
  RETURN_IF_ERROR(CheckCompatible(game, mech));
  const int nh = mech.num_releases();
  const int nt = game.num_parameters();
  MechanismEvaluation out;
  out.release_mass.assign(nh, 0.0);
  out.bob_decision.assign(nh, -1);
  out.eve_decision.assign(nh, -1);
  double r_b = 0.0, r_e = 0.0;
  for (int eta = 0; eta < nh; ++eta) {
    const double mass = ReleaseMass(game, mech, eta);
    out.release_mass[eta] = mass;
    if (!(mass > 0.0)) continue;
    ASSIGN_OR_RETURN(std::vector<double> data_posterior,
                     PosteriorOverData(game, mech, eta));
    std::vector<double> theta_posterior(nt, 0.0);
    for (int x = 0; x < game.num_data(); ++x) {
      for (int t = 0; t < nt; ++t) {
        theta_posterior[t] +=
            game.parameter_posterior()(x, t) * data_posterior[x];
      }
    }
    ASSIGN_OR_RETURN(BayesDecision bob,
                     ChooseBayesDecision(theta_posterior, game.bob_loss()));
    ASSIGN_OR_RETURN(BayesDecision eve,
                     ChooseBayesDecision(data_posterior, game.eve_loss()));
    out.bob_decision[eta] = bob.index;
    out.eve_decision[eta] = eve.index;
    r_b += mass * bob.expected_loss;
    r_e += mass * eve.expected_loss;
  }
  out.risks = MakeRiskTriple(r_b, r_e, weights.lambda);
  return out;
}

absl::StatusOr<RiskTriple> EvaluateMechanism(const FiniteGame& game,
                                             const FiniteMechanism& mech,
                                             const RiskWeights& weights) {
  ASSIGN_OR_RETURN(MechanismEvaluation evaluation,
                   EvaluateMechanismDetailed(game, mech, weights));
  return evaluation.risks;
}

absl::StatusOr<double> CalibrateLambda(const RiskTriple& full,
                                       const RiskTriple& null) {
  const double denominator = null.r_e - full.r_e;
  if (denominator == 0.0 || !std::isfinite(denominator)) {
    return absl::FailedPreconditionError(
        "calibration undefined: full and null releases give Eve equal risk");
  }
  return (null.r_b - full.r_b) / denominator;
}

}  // namespace bap
