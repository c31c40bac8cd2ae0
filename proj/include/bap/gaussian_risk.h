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

// Integrated 0-1 Bayes risks of the Gaussian testing game.
//
// Every (mechanism, agent, target) case is dispatched to one of three
// methods: a closed form, one-dimensional (possibly nested) quadrature, or
// Monte Carlo over a shared table of prior-predictive draws. The draws are
// generated once per evaluator from the configured seed and reused for every
// mechanism parameter, so estimates along a sweep use common random numbers.

#ifndef BAP_GAUSSIAN_RISK_H_
#define BAP_GAUSSIAN_RISK_H_

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "bap/finite_game.h"
#include "bap/gaussian_model.h"
#include "bap/quadrature.h"

namespace bap {

// Ordered from most to least exact.
enum class EvalMethod { kClosedForm, kQuadrature, kMonteCarlo };

std::string_view EvalMethodName(EvalMethod method);

struct RiskEstimate {
  double value = 0.0;
  double std_error = 0.0;  // zero for deterministic methods
  EvalMethod method = EvalMethod::kClosedForm;
};

struct GaussianRisks {
  RiskEstimate bob;
  RiskEstimate eve;

  RiskTriple Triple(double lambda) const {
    return MakeRiskTriple(bob.value, eve.value, lambda);
  }
  // The less exact of the two methods.
  EvalMethod method() const {
    return bob.method > eve.method ? bob.method : eve.method;
  }
};

// Prior-predictive samples shared by the Monte Carlo paths.
struct PredictiveDraws {
  int n = 0;
  int64_t size = 0;
  std::vector<double> theta;
  std::vector<double> data;        // size x n, row-major
  std::vector<double> data_noise;  // size x n standard normals
  std::vector<double> median_noise;
  std::vector<double> mean;
  std::vector<double> max;
  std::vector<double> median;
};

// Draws `samples` prior-predictive datasets from RandomSource(seed, 0).
PredictiveDraws GeneratePredictiveDraws(const GaussianModel& model,
                                        int64_t samples, uint64_t seed);

class GaussianEvaluator {
 public:
  static absl::StatusOr<GaussianEvaluator> Create(const GaussianModel& model,
                                                  const NumericsConfig& cfg);

  const GaussianModel& model() const { return model_; }
  const NumericsConfig& config() const { return cfg_; }

  // `target` only selects the histogram bin count of the noisy median path.
  absl::StatusOr<RiskEstimate> RiskBob(
      const GaussianMechanism& mech,
      AdversaryTarget target = AdversaryTarget::kMean) const;
  absl::StatusOr<RiskEstimate> RiskEve(const GaussianMechanism& mech,
                                       AdversaryTarget target) const;
  absl::StatusOr<GaussianRisks> Evaluate(const GaussianMechanism& mech,
                                         AdversaryTarget target) const;

  // Monte Carlo estimate of the noisy full mean-target Eve risk, for
  // cross-checking the quadrature path.
  absl::StatusOr<RiskEstimate> NoisyFullMeanEveMonteCarlo(double sigma) const;

  // E[min(Phi(u), 1 - Phi(u))] for u = alpha + beta Z, Z standard normal.
  double ExpectProbitRisk(double alpha, double beta) const;

  // Thread-safe; generated on first use.
  const PredictiveDraws& draws() const;

 private:
  struct Shared;

  GaussianEvaluator(const GaussianModel& model, const NumericsConfig& cfg,
                    GaussianIntegrator outer, QuadratureRule inner,
                    QuadratureRule legendre);

  double NullEveMax() const;
  double NoisyMeanEveMax(double sigma) const;
  RiskEstimate NoisyFullEveMax(double sigma) const;
  absl::StatusOr<RiskEstimate> NoisyMedian(double sigma, bool bob,
                                           AdversaryTarget target) const;
  absl::StatusOr<RiskEstimate> OneBitBob(double tau) const;
  absl::StatusOr<RiskEstimate> OneBitEve(double tau,
                                         AdversaryTarget target) const;

  GaussianModel model_;
  NumericsConfig cfg_;
  GaussianIntegrator outer_;
  QuadratureRule inner_;
  QuadratureRule legendre_;
  std::shared_ptr<Shared> shared_;
};

}  // namespace bap

#endif  // BAP_GAUSSIAN_RISK_H_
