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

#include "bap/histogram_regressor.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace bap {

absl::StatusOr<HistogramRegressor> HistogramRegressor::Create(
    int bins, double half_width, double alpha) {
  if (bins < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("bin count must be positive, got %d", bins));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("range half-width must be positive, got %g",
                        half_width));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("smoothing must be nonnegative, got %g", alpha));
  }
  return HistogramRegressor(bins, half_width, alpha);
}

int HistogramRegressor::CellOf(double eta) const {
  if (eta < -half_width_) return 0;
  if (eta > half_width_) return bins_ + 1;
  const double position = (eta + half_width_) / (2.0 * half_width_) * bins_;
  int bin = static_cast<int>(std::floor(position));
  // eta == half_width belongs to the last bin.
  if (bin >= bins_) bin = bins_ - 1;
  return bin + 1;
}

void HistogramRegressor::Record(double eta, bool success) {
  const int cell = CellOf(eta);
  ++totals_[cell];
  if (success) ++successes_[cell];
  ++recorded_;
}

double HistogramRegressor::EstimateCell(int cell) const {
  const double numerator = static_cast<double>(successes_[cell]) + alpha_;
  const double denominator = static_cast<double>(totals_[cell]) + 2.0 * alpha_;
  // Only reachable with alpha == 0 and an empty cell.
  if (denominator == 0.0) return 0.5;
  return numerator / denominator;
}

double HistogramRegressor::Estimate(double eta) const {
  return EstimateCell(CellOf(eta));
}

}  // namespace bap
