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

// Conjugate Gaussian testing game:
//
//   theta ~ N(0, sigma0^2),   X_1..X_n | theta ~ iid N(theta, 1).
//
// Bob tests theta > c_B. Eve tests either mean(X) > c_E or max(X) > c_E.

#ifndef BAP_GAUSSIAN_MODEL_H_
#define BAP_GAUSSIAN_MODEL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace bap {

struct GaussianModel {
  int n = 5;
  double sigma0 = 1.0;
  double c_b = 0.0;
  double c_e = 0.0;

  absl::Status Validate() const;
};

enum class AdversaryTarget { kMean, kMax };

enum class MechanismKind {
  kFull,
  kNull,
  kNoisyFull,
  kNoisyMean,
  kNoisyMedian,
  kOneBit,
};

// `parameter` is the noise level sigma for the noisy releases and the
// threshold tau for the one-bit release; unused otherwise.
struct GaussianMechanism {
  MechanismKind kind = MechanismKind::kFull;
  double parameter = 0.0;

  static GaussianMechanism Full() { return {MechanismKind::kFull, 0.0}; }
  static GaussianMechanism Null() { return {MechanismKind::kNull, 0.0}; }
  static GaussianMechanism NoisyFull(double sigma) {
    return {MechanismKind::kNoisyFull, sigma};
  }
  static GaussianMechanism NoisyMean(double sigma) {
    return {MechanismKind::kNoisyMean, sigma};
  }
  static GaussianMechanism NoisyMedian(double sigma) {
    return {MechanismKind::kNoisyMedian, sigma};
  }
  static GaussianMechanism OneBit(double tau) {
    return {MechanismKind::kOneBit, tau};
  }

  absl::Status Validate() const;
};

// True for the families that carry a parameter.
bool IsParametric(MechanismKind kind);

std::string_view MechanismName(MechanismKind kind);
std::string_view TargetName(AdversaryTarget target);
absl::StatusOr<MechanismKind> ParseMechanismKind(std::string_view name);
absl::StatusOr<AdversaryTarget> ParseTarget(std::string_view name);

inline constexpr uint64_t kDefaultSeed = 20260101;

struct NumericsConfig {
  int quad_order = 80;
  // Inner rule for the per-sample posterior expectation of the noisy full
  // release under the max target.
  int inner_quad_order = 32;
  int64_t mc_samples = 200000;
  uint64_t seed = kDefaultSeed;
  // 0 selects the target default (200 for mean, 500 for max).
  int bins = 0;
  double range_multiplier = 6.0;
  double alpha = 0.5;

  int BinsFor(AdversaryTarget target) const;
  absl::Status Validate() const;
};

// Derived conjugate quantities for a model and noise level sigma.
struct PosteriorParams {
  double v_x;        // Var(theta | X)
  double v_xbar;     // prior predictive Var(mean(X))
  double v_full;     // Var(theta | Y), Y = X + sigma * noise
  double a;          // slope of E[mean(X) | mean(Y)]
  double v_eta;      // Var(eta | theta), eta = mean(X) + sigma * noise
  double v_mean;     // Var(theta | eta)
  double a_tilde;    // slope of E[mean(X) | eta]
  double s2;         // Var(X_i | theta, Y_i)
  double v_med;      // large-sample variance of the sample median
};

PosteriorParams ComputePosteriorParams(const GaussianModel& model,
                                       double sigma);

// Posterior mean coefficients: E[theta | X] = v_x n mean(X),
// E[theta | Y] = v_full n / (1 + sigma^2) mean(Y),
// E[theta | eta] = v_mean eta / v_eta.

// Mean threshold equivalent to P(theta > c_B | X) > tau. Returns +inf at
// tau = 0 and -inf at tau = 1.
absl::StatusOr<double> OneBitThreshold(const GaussianModel& model, double tau);

}  // namespace bap

#endif  // BAP_GAUSSIAN_MODEL_H_
