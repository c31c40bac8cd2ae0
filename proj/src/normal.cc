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

#include "bap/normal.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace bap {
namespace {

// Acklam's rational approximation; relative error below 1.2e-9 before
// refinement.
constexpr std::array<double, 6> kCentralNumerator = {
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> kCentralDenominator = {
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01, -1.328068155288572e+01};
constexpr std::array<double, 6> kTailNumerator = {
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr std::array<double, 4> kTailDenominator = {
    7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
    3.754408661907416e+00};
constexpr double kTailBreak = 0.02425;

// Quantile for p in (0, 1/2].
double LowerQuantile(double p) {
  double x;
  if (p < kTailBreak) {
    const double q = std::sqrt(-2.0 * std::log(p));
    double num = kTailNumerator[0];
    for (size_t i = 1; i < kTailNumerator.size(); ++i) {
      num = num * q + kTailNumerator[i];
    }
    double den = kTailDenominator[0];
    for (size_t i = 1; i < kTailDenominator.size(); ++i) {
      den = den * q + kTailDenominator[i];
    }
    x = num / (den * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    double num = kCentralNumerator[0];
    for (size_t i = 1; i < kCentralNumerator.size(); ++i) {
      num = num * r + kCentralNumerator[i];
    }
    double den = kCentralDenominator[0];
    for (size_t i = 1; i < kCentralDenominator.size(); ++i) {
      den = den * r + kCentralDenominator[i];
    }
    x = num * q / (den * r + 1.0);
  }
  // One Newton step on the CDF squares the relative error.
  const double density = NormalPdf(x);
  if (density > 0.0) {
    x -= (NormalCdf(x) - p) / density;
  }
  return x;
}

}  // namespace

double NormalCdf(double x) {
  if (std::isnan(x)) return x;
  return std::clamp(0.5 * std::erfc(-x * kInvSqrtTwo), 0.0, 1.0);
}

absl::StatusOr<double> NormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("quantile level must lie in (0, 1), got %g", p));
  }
  if (p == 0.5) return 0.0;
  if (p < 0.5) return LowerQuantile(p);
  // 1 - p is exact for p in [1/2, 1).
  return -LowerQuantile(1.0 - p);
}

}  // namespace bap
