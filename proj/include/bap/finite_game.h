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

// Finite privacy games: a parameter with a prior, data drawn from a
// likelihood, a statistician (Bob) estimating the parameter and an adversary
// (Eve) targeting the data, plus a release kernel from data to releases.

#ifndef BAP_FINITE_GAME_H_
#define BAP_FINITE_GAME_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "bap/matrix.h"

namespace bap {

inline constexpr double kStochasticTolerance = 1e-12;

inline constexpr char kNullSymbol[] = "\xe2\x80\xa0";  // U+2020 dagger

struct GameTables {
  std::vector<std::string> parameters;
  std::vector<double> prior;
  std::vector<std::string> data;
  Matrix likelihood;  // |parameters| x |data|
  std::vector<std::string> bob_decisions;
  std::vector<std::string> eve_decisions;
  Matrix bob_loss;  // |parameters| x |bob_decisions|
  Matrix eve_loss;  // |data| x |eve_decisions|
};

class FiniteGame {
 public:
  // Error messages name the offending field, e.g. "likelihood[1] sums to 0.9".
  static absl::StatusOr<FiniteGame> Create(GameTables tables);

  const GameTables& tables() const { return tables_; }
  int num_parameters() const { return static_cast<int>(tables_.prior.size()); }
  int num_data() const { return static_cast<int>(tables_.data.size()); }
  int num_bob_decisions() const {
    return static_cast<int>(tables_.bob_decisions.size());
  }
  int num_eve_decisions() const {
    return static_cast<int>(tables_.eve_decisions.size());
  }
  double prior(int t) const { return tables_.prior[t]; }
  double likelihood(int t, int x) const { return tables_.likelihood(t, x); }
  const Matrix& bob_loss() const { return tables_.bob_loss; }
  const Matrix& eve_loss() const { return tables_.eve_loss; }

  // p(x) = sum_t p(x | t) pi(t).
  const std::vector<double>& prior_predictive() const {
    return prior_predictive_;
  }

  // pi(t | x); rows with p(x) = 0 hold the prior.
  const Matrix& parameter_posterior() const { return parameter_posterior_; }

  // Bob's loss averaged over pi(t | x): |data| x |bob_decisions|.
  const Matrix& expected_bob_loss() const { return expected_bob_loss_; }

 private:
  explicit FiniteGame(GameTables tables);

  GameTables tables_;
  std::vector<double> prior_predictive_;
  Matrix parameter_posterior_;
  Matrix expected_bob_loss_;
};

class FiniteMechanism {
 public:
  // kernel is |data| x |releases| and row-stochastic.
  static absl::StatusOr<FiniteMechanism> Create(
      std::vector<std::string> releases, Matrix kernel);

  // Release the datum itself.
  static FiniteMechanism Full(const FiniteGame& game);
  // Release a single uninformative symbol.
  static FiniteMechanism Null(const FiniteGame& game);

  const std::vector<std::string>& releases() const { return releases_; }
  const Matrix& kernel() const { return kernel_; }
  int num_releases() const { return static_cast<int>(releases_.size()); }
  double q(int x, int eta) const { return kernel_(x, eta); }

 private:
  FiniteMechanism(std::vector<std::string> releases, Matrix kernel)
      : releases_(std::move(releases)), kernel_(std::move(kernel)) {}

  std::vector<std::string> releases_;
  Matrix kernel_;
};

struct RiskWeights {
  double lambda = 0.0;

  absl::Status Validate() const;
};

struct RiskTriple {
  double r_b = 0.0;
  double r_e = 0.0;
  double r_a = 0.0;
  double lambda = 0.0;
};

inline RiskTriple MakeRiskTriple(double r_b, double r_e, double lambda) {
  return RiskTriple{r_b, r_e, r_b - lambda * r_e, lambda};
}

}  // namespace bap

#endif  // BAP_FINITE_GAME_H_
