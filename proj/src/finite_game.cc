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

#include "bap/finite_game.h"

#include <cmath>
#include <string_view>
#include <utility>

#include "absl/strings/str_format.h"
#include "absl/strings/string_view.h"

namespace bap {
namespace {

absl::Status CheckShape(absl::string_view field, const Matrix& m, int rows,
                        int cols) {
  if (m.rows() != rows || m.cols() != cols) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s is %dx%d, expected %dx%d", field, m.rows(), m.cols(), rows, cols));
  }
  return absl::OkStatus();
}

absl::Status CheckDistribution(std::string field, const double* p, int n) {
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(p[i]) || p[i] < 0.0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "%s[%d] = %g is not a probability", field, i, p[i]));
    }
    total += p[i];
  }
  if (std::abs(total - 1.0) > kStochasticTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s sums to %.15g", field, total));
  }
  return absl::OkStatus();
}

absl::Status CheckLoss(absl::string_view field, const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (!std::isfinite(m(r, c)) || m(r, c) < 0.0) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "%s[%d][%d] = %g must be finite and nonnegative", field, r, c,
            m(r, c)));
      }
    }
  }
  return absl::OkStatus();
}

absl::Status CheckNonEmpty(absl::string_view field,
                           const std::vector<std::string>& labels) {
  if (labels.empty()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s must not be empty", field));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<FiniteGame> FiniteGame::Create(GameTables tables) {
  for (const auto& [field, labels] :
       {std::pair<absl::string_view, const std::vector<std::string>*>{
            "parameters", &tables.parameters},
        {"data", &tables.data},
        {"bob_decisions", &tables.bob_decisions},
        {"eve_decisions", &tables.eve_decisions}}) {
    if (absl::Status s = CheckNonEmpty(field, *labels); !s.ok()) return s;
  }
  const int nt = static_cast<int>(tables.parameters.size());
  const int nx = static_cast<int>(tables.data.size());
  if (static_cast<int>(tables.prior.size()) != nt) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "prior has %d entries, expected %d", tables.prior.size(), nt));
  }
  if (absl::Status s = CheckDistribution("prior", tables.prior.data(), nt);
      !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckShape("likelihood", tables.likelihood, nt, nx);
      !s.ok()) {
    return s;
  }
  for (int t = 0; t < nt; ++t) {
    if (absl::Status s =
            CheckDistribution(absl::StrFormat("likelihood[%d]", t),
                              tables.likelihood.row(t), nx);
        !s.ok()) {
      return s;
    }
  }
  if (absl::Status s = CheckShape("bob_loss", tables.bob_loss, nt,
                                  static_cast<int>(tables.bob_decisions.size()));
      !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckShape("eve_loss", tables.eve_loss, nx,
                                  static_cast<int>(tables.eve_decisions.size()));
      !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckLoss("bob_loss", tables.bob_loss); !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckLoss("eve_loss", tables.eve_loss); !s.ok()) {
    return s;
  }
  return FiniteGame(std::move(tables));
}

FiniteGame::FiniteGame(GameTables tables) : tables_(std::move(tables)) {
  const int nt = num_parameters();
  const int nx = num_data();
  const int nb = num_bob_decisions();
  prior_predictive_.assign(nx, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int t = 0; t < nt; ++t) {
      prior_predictive_[x] += tables_.likelihood(t, x) * tables_.prior[t];
    }
  }
  parameter_posterior_ = Matrix(nx, nt);
  for (int x = 0; x < nx; ++x) {
    for (int t = 0; t < nt; ++t) {
      parameter_posterior_(x, t) =
          prior_predictive_[x] > 0.0
              ? tables_.likelihood(t, x) * tables_.prior[t] /
                    prior_predictive_[x]
              : tables_.prior[t];
    }
  }
  expected_bob_loss_ = Matrix(nx, nb);
  for (int x = 0; x < nx; ++x) {
    for (int i = 0; i < nb; ++i) {
      double total = 0.0;
      for (int t = 0; t < nt; ++t) {
        total += tables_.bob_loss(t, i) * parameter_posterior_(x, t);
      }
      expected_bob_loss_(x, i) = total;
    }
  }
}

absl::StatusOr<FiniteMechanism> FiniteMechanism::Create(
    std::vector<std::string> releases, Matrix kernel) {
  if (releases.empty()) {
    return absl::InvalidArgumentError("releases must not be empty");
  }
  if (kernel.cols() != static_cast<int>(releases.size())) {
    return absl::InvalidArgumentError(
        absl::StrFormat("kernel has %d columns, expected %d", kernel.cols(),
                        releases.size()));
  }
  for (int x = 0; x < kernel.rows(); ++x) {
    if (absl::Status s = CheckDistribution(absl::StrFormat("kernel[%d]", x),
                                           kernel.row(x), kernel.cols());
        !s.ok()) {
      return s;
    }
  }
  return FiniteMechanism(std::move(releases), std::move(kernel));
}

FiniteMechanism FiniteMechanism::Full(const FiniteGame& game) {
  const int nx = game.num_data();
  Matrix kernel(nx, nx);
  for (int x = 0; x < nx; ++x) kernel(x, x) = 1.0;
  return FiniteMechanism(game.tables().data, std::move(kernel));
}

FiniteMechanism FiniteMechanism::Null(const FiniteGame& game) {
  return FiniteMechanism({kNullSymbol}, Matrix(game.num_data(), 1, 1.0));
}

absl::Status RiskWeights::Validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "lambda must be finite and nonnegative, got %g", lambda));
  }
  return absl::OkStatus();
}

}  // namespace bap
