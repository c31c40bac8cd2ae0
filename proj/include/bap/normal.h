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

#ifndef BAP_NORMAL_H_
#define BAP_NORMAL_H_

#include <cmath>

#include "absl/status/statusor.h"

namespace bap {

inline constexpr double kSqrtTwoPi = 2.50662827463100050242;
inline constexpr double kInvSqrtTwo = 0.70710678118654752440;

// Standard normal density.
inline double NormalPdf(double x) {
  return std::exp(-0.5 * x * x) / kSqrtTwoPi;
}

// Standard normal CDF, clamped to [0, 1]. Evaluated through erfc so that the
// lower tail keeps full relative precision.
double NormalCdf(double x);

// Survival function 1 - NormalCdf(x), accurate in the upper tail.
inline double NormalSf(double x) { return NormalCdf(-x); }

// Inverse of NormalCdf on the open interval (0, 1). Returns an
// InvalidArgument error for p <= 0, p >= 1 or NaN.
absl::StatusOr<double> NormalQuantile(double p);

}  // namespace bap

#endif  // BAP_NORMAL_H_
