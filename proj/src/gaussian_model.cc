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

#include "bap/gaussian_model.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "absl/strings/str_format.h"
#include "bap/normal.h"
#include "bap/quadrature.h"
#include "bap/status_macros.h"

namespace bap {

absl::Status GaussianModel::Validate() const {
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("n must be at least 1, got %d", n));
  }
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("sigma0 must be positive, got %g", sigma0));
  }
  if (!std::isfinite(c_b) || !std::isfinite(c_e)) {
    return absl::InvalidArgumentError("thresholds must be finite");
  }
  return absl::OkStatus();
}

absl::Status GaussianMechanism::Validate() const {
  switch (kind) {
    case MechanismKind::kFull:
    case MechanismKind::kNull:
      return absl::OkStatus();
    case MechanismKind::kNoisyFull:
    case MechanismKind::kNoisyMean:
    case MechanismKind::kNoisyMedian:
      if (!(parameter >= 0.0) || !std::isfinite(parameter)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "%s noise level must be finite and nonnegative, got %g",
            std::string(MechanismName(kind)), parameter));
      }
      return absl::OkStatus();
    case MechanismKind::kOneBit:
      if (!(parameter >= 0.0 && parameter <= 1.0)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "one-bit threshold tau must lie in [0, 1], got %g", parameter));
      }
      return absl::OkStatus();
  }
  return absl::InvalidArgumentError("unknown mechanism");
}

bool IsParametric(MechanismKind kind) {
  return kind != MechanismKind::kFull && kind != MechanismKind::kNull;
}

std::string_view MechanismName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kFull:
      return "full";
    case MechanismKind::kNull:
      return "null";
    case MechanismKind::kNoisyFull:
      return "noisy-full";
    case MechanismKind::kNoisyMean:
      return "noisy-mean";
    case MechanismKind::kNoisyMedian:
      return "noisy-median";
    case MechanismKind::kOneBit:
      return "one-bit";
  }
  return "unknown";
}

std::string_view TargetName(AdversaryTarget target) {
  return target == AdversaryTarget::kMean ? "mean" : "max";
}

absl::StatusOr<MechanismKind> ParseMechanismKind(std::string_view name) {
  for (MechanismKind kind :
       {MechanismKind::kFull, MechanismKind::kNull, MechanismKind::kNoisyFull,
        MechanismKind::kNoisyMean, MechanismKind::kNoisyMedian,
        MechanismKind::kOneBit}) {
    if (name == MechanismName(kind)) return kind;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown mechanism '%s'; valid values: full, null, noisy-full, "
      "noisy-mean, noisy-median, one-bit",
      std::string(name)));
}

absl::StatusOr<AdversaryTarget> ParseTarget(std::string_view name) {
  if (name == "mean") return AdversaryTarget::kMean;
  if (name == "max") return AdversaryTarget::kMax;
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown target '%s'; valid values: mean, max", std::string(name)));
}

int NumericsConfig::BinsFor(AdversaryTarget target) const {
  if (bins > 0) return bins;
  return target == AdversaryTarget::kMax ? 500 : 200;
}

absl::Status NumericsConfig::Validate() const {
  for (int order : {quad_order, inner_quad_order}) {
    if (order < 1 || order > kMaxQuadratureOrder) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "quadrature order must lie in [1, %d], got %d", kMaxQuadratureOrder,
          order));
    }
  }
  if (mc_samples < 2) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "Monte Carlo sample count must be at least 2, got %d", mc_samples));
  }
  if (bins < 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("bin count must be nonnegative, got %d", bins));
  }
  if (!(range_multiplier > 0.0) || !std::isfinite(range_multiplier)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "range multiplier must be positive, got %g", range_multiplier));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("smoothing must be nonnegative, got %g", alpha));
  }
  return absl::OkStatus();
}

PosteriorParams ComputePosteriorParams(const GaussianModel& model,
                                       double sigma) {
  const double n = model.n;
  const double prior_precision = 1.0 / (model.sigma0 * model.sigma0);
  const double s2 = sigma * sigma;
  PosteriorParams p;
  p.v_x = 1.0 / (prior_precision + n);
  p.v_xbar = model.sigma0 * model.sigma0 + 1.0 / n;
  p.v_full = 1.0 / (prior_precision + n / (1.0 + s2));
  p.a = p.v_xbar / (p.v_xbar + s2 / n);
  p.v_eta = 1.0 / n + s2;
  p.v_mean = 1.0 / (prior_precision + 1.0 / p.v_eta);
  p.a_tilde = p.v_xbar / (p.v_xbar + s2);
  p.s2 = s2 / (1.0 + s2);
  p.v_med = std::numbers::pi / (2.0 * n);
  return p;
}

absl::StatusOr<double> OneBitThreshold(const GaussianModel& model,
                                       double tau) {
  RETURN_IF_ERROR(model.Validate());
  if (!(tau >= 0.0 && tau <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("tau must lie in [0, 1], got %g", tau));
  }
  if (tau == 0.0) return std::numeric_limits<double>::infinity();
  if (tau == 1.0) return -std::numeric_limits<double>::infinity();
  const double v_x = ComputePosteriorParams(model, 0.0).v_x;
  // Phi^{-1}(1 - tau) = -Phi^{-1}(tau).
  ASSIGN_OR_RETURN(double q, NormalQuantile(tau));
  return (model.c_b + std::sqrt(v_x) * q) / (model.n * v_x);
}

}  // namespace bap
