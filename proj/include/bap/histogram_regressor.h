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

#ifndef BAP_HISTOGRAM_REGRESSOR_H_
#define BAP_HISTOGRAM_REGRESSOR_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"

namespace bap {

// Estimates P(S = 1 | eta) by binning eta on a uniform grid of `bins` cells
// over [-half_width, half_width] and applying additive smoothing:
//
//   p_hat = (successes_in_bin + alpha) / (samples_in_bin + 2 alpha).
//
// Values below or above the grid land in two overflow cells, which are
// estimated the same way.
class HistogramRegressor {
 public:
  static absl::StatusOr<HistogramRegressor> Create(int bins, double half_width,
                                                   double alpha);

  // Cell index in [0, bins + 1]; 0 is the lower and bins + 1 the upper
  // overflow cell.
  int CellOf(double eta) const;

  void Record(double eta, bool success);
  double Estimate(double eta) const;
  double EstimateCell(int cell) const;

  int bins() const { return bins_; }
  double half_width() const { return half_width_; }
  double alpha() const { return alpha_; }
  int64_t successes(int cell) const { return successes_[cell]; }
  int64_t totals(int cell) const { return totals_[cell]; }
  int64_t recorded() const { return recorded_; }

 private:
  HistogramRegressor(int bins, double half_width, double alpha)
      : bins_(bins),
        half_width_(half_width),
        alpha_(alpha),
        successes_(bins + 2, 0),
        totals_(bins + 2, 0) {}

  int bins_;
  double half_width_;
  double alpha_;
  std::vector<int64_t> successes_;
  std::vector<int64_t> totals_;
  int64_t recorded_ = 0;
};

}  // namespace bap

#endif  // BAP_HISTOGRAM_REGRESSOR_H_
