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

#include "bap/matrix.h"

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace bap {

absl::StatusOr<Matrix> Matrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix out(n, m);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != m) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "row %d has %d entries, expected %d", r, rows[r].size(), m));
    }
    for (int c = 0; c < m; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

double Matrix::RowSum(int r) const {
  double total = 0.0;
  for (int c = 0; c < cols_; ++c) total += (*this)(r, c);
  return total;
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

}  // namespace bap
