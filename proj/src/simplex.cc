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

#include "bap/simplex.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_format.h"

namespace bap {
namespace {

absl::Status CheckFinite(const char* name, const double* v, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(v[i])) {
      return absl::InvalidArgumentError(
          absl::StrFormat("%s[%d] is not finite", name, i));
    }
  }
  return absl::OkStatus();
}

// Canonical-form tableau. Columns: structural, slack, artificial.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), t_(rows, cols + 1), obj_(cols + 1, 0.0),
        basis_(rows, -1) {}

  double& at(int r, int c) { return t_(r, c); }
  double& rhs(int r) { return t_(r, cols_); }
  int& basis(int r) { return basis_[r]; }

  // Reduced costs for `cost` (length cols_) given the current basis.
  void Price(const std::vector<double>& cost) {
    for (int c = 0; c <= cols_; ++c) {
      double v = c < cols_ ? cost[c] : 0.0;
      for (int r = 0; r < rows_; ++r) {
        if (basis_[r] >= 0) v -= cost[basis_[r]] * t_(r, c);
      }
      obj_[c] = v;
    }
  }

  void Pivot(int pr, int pc) {
    const double p = t_(pr, pc);
    for (int c = 0; c <= cols_; ++c) t_(pr, c) /= p;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = t_(r, pc);
      if (f == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) t_(r, c) -= f * t_(pr, c);
    }
    const double f = obj_[pc];
    if (f != 0.0) {
      for (int c = 0; c <= cols_; ++c) obj_[c] -= f * t_(pr, c);
    }
    basis_[pr] = pc;
  }

  // Bland's rule. Columns with allowed[c] == false never enter.
  // Returns kOptimal or kUnbounded.
  LPStatus Run(const std::vector<bool>& allowed, double tol,
               int max_iterations, int* iterations) {
    for (;;) {
      if (++*iterations > max_iterations) return LPStatus::kInfeasible;
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (allowed[c] && obj_[c] < -tol) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return LPStatus::kOptimal;
      int leave = -1;
      double best = 0.0;
      for (int r = 0; r < rows_; ++r) {
        if (basis_[r] < 0 || t_(r, enter) <= tol) continue;
        const double ratio = t_(r, cols_) / t_(r, enter);
        if (leave < 0 || ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return LPStatus::kUnbounded;
      Pivot(leave, enter);
    }
  }

  double objective() const { return -obj_[cols_]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  Matrix t_;
  std::vector<double> obj_;
  std::vector<int> basis_;  // -1 marks a dropped redundant row
};

}  // namespace

const char* LPStatusName(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal:
      return "optimal";
    case LPStatus::kInfeasible:
      return "infeasible";
    case LPStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

absl::Status LinearProgram::Validate() const {
  const int n = num_variables();
  if (n == 0) return absl::InvalidArgumentError("no variables");
  if (a_eq.rows() != static_cast<int>(b_eq.size()) ||
      (a_eq.rows() > 0 && a_eq.cols() != n)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "equality block is %dx%d with %d right-hand sides; expected %d columns",
        a_eq.rows(), a_eq.cols(), b_eq.size(), n));
  }
  if (a_le.rows() != static_cast<int>(b_le.size()) ||
      (a_le.rows() > 0 && a_le.cols() != n)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "inequality block is %dx%d with %d right-hand sides; expected %d "
        "columns",
        a_le.rows(), a_le.cols(), b_le.size(), n));
  }
  if (absl::Status s = CheckFinite("cost", cost.data(), cost.size()); !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckFinite("b_eq", b_eq.data(), b_eq.size());
      !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckFinite("b_le", b_le.data(), b_le.size());
      !s.ok()) {
    return s;
  }
  for (int r = 0; r < a_eq.rows(); ++r) {
    if (absl::Status s = CheckFinite("a_eq row", a_eq.row(r), n); !s.ok()) {
      return s;
    }
  }
  for (int r = 0; r < a_le.rows(); ++r) {
    if (absl::Status s = CheckFinite("a_le row", a_le.row(r), n); !s.ok()) {
      return s;
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<LPSolution> SolveLinearProgram(const LinearProgram& lp,
                                              const SimplexOptions& options) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  const int n = lp.num_variables();
  const int m_eq = lp.a_eq.rows();
  const int m_le = lp.a_le.rows();
  const int m = m_eq + m_le;
  const int slack0 = n;
  const int art0 = n + m_le;
  const int cols = art0 + m;
  const double tol = options.pivot_tolerance;

  Tableau tab(m, cols);
  for (int r = 0; r < m; ++r) {
    const bool is_eq = r < m_eq;
    const double* row = is_eq ? lp.a_eq.row(r) : lp.a_le.row(r - m_eq);
    const double b = is_eq ? lp.b_eq[r] : lp.b_le[r - m_eq];
    const double sign = b < 0.0 ? -1.0 : 1.0;
    for (int c = 0; c < n; ++c) tab.at(r, c) = sign * row[c];
    if (!is_eq) tab.at(r, slack0 + (r - m_eq)) = sign;
    tab.at(r, art0 + r) = 1.0;
    tab.rhs(r) = sign * b;
    tab.basis(r) = art0 + r;
  }

  int iterations = 0;
  std::vector<double> phase1_cost(cols, 0.0);
  for (int c = art0; c < cols; ++c) phase1_cost[c] = 1.0;
  tab.Price(phase1_cost);
  std::vector<bool> allowed(cols, true);
  tab.Run(allowed, tol, options.max_iterations, &iterations);
  if (iterations > options.max_iterations) {
    return absl::ResourceExhaustedError("simplex iteration limit reached");
  }
  double scale = 1.0;
  for (int r = 0; r < m; ++r) scale = std::max(scale, std::abs(tab.rhs(r)));
  if (tab.objective() > tol * scale) {
    return LPSolution{LPStatus::kInfeasible, {}, 0.0};
  }

  // Drive zero-level artificials out of the basis, dropping redundant rows.
  for (int r = 0; r < m; ++r) {
    if (tab.basis(r) < art0) continue;
    int pc = -1;
    for (int c = 0; c < art0; ++c) {
      if (std::abs(tab.at(r, c)) > tol) {
        pc = c;
        break;
      }
    }
    if (pc >= 0) {
      tab.Pivot(r, pc);
    } else {
      tab.basis(r) = -1;
    }
  }

  std::vector<double> phase2_cost(cols, 0.0);
  std::copy(lp.cost.begin(), lp.cost.end(), phase2_cost.begin());
  for (int c = art0; c < cols; ++c) allowed[c] = false;
  tab.Price(phase2_cost);
  const LPStatus status =
      tab.Run(allowed, tol, options.max_iterations, &iterations);
  if (iterations > options.max_iterations) {
    return absl::ResourceExhaustedError("simplex iteration limit reached");
  }
  if (status == LPStatus::kUnbounded) {
    return LPSolution{LPStatus::kUnbounded, {}, 0.0};
  }

  LPSolution out{LPStatus::kOptimal, std::vector<double>(n, 0.0), 0.0};
  for (int r = 0; r < m; ++r) {
    const int b = tab.basis(r);
    if (b >= 0 && b < n) out.x[b] = tab.rhs(r);
  }
  out.objective =
      std::inner_product(lp.cost.begin(), lp.cost.end(), out.x.begin(), 0.0);
  return out;
}

double MaxConstraintViolation(const LinearProgram& lp,
                              const std::vector<double>& x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (int r = 0; r < lp.a_eq.rows(); ++r) {
    double lhs = 0.0;
    for (int c = 0; c < lp.num_variables(); ++c) lhs += lp.a_eq(r, c) * x[c];
    worst = std::max(worst, std::abs(lhs - lp.b_eq[r]));
  }
  for (int r = 0; r < lp.a_le.rows(); ++r) {
    double lhs = 0.0;
    for (int c = 0; c < lp.num_variables(); ++c) lhs += lp.a_le(r, c) * x[c];
    worst = std::max(worst, lhs - lp.b_le[r]);
  }
  return worst;
}

}  // namespace bap
