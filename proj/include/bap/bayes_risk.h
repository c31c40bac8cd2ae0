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

#ifndef BAP_BAYES_RISK_H_
#define BAP_BAYES_RISK_H_

#include <algorithm>

#include "absl/status/statusor.h"

namespace bap {

// Minimal 0-1 Bayes risk when the target event has posterior probability p:
// min(p, 1 - p). Rejects p outside [0, 1].
absl::StatusOr<double> BayesRisk01(double p);

// Unchecked form for inner loops; p is assumed to lie in [0, 1].
inline double ZeroOneRisk(double p) { return std::min(p, 1.0 - p); }

}  // namespace bap

#endif  // BAP_BAYES_RISK_H_
