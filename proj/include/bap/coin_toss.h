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

// The fixed-versus-fair coin game. The coin is two-tailed (theta = 0) or
// fair (theta = 1/2) with equal prior odds and is tossed once. Bob guesses
// theta under 0-1 loss. Eve guesses the toss X; missing X = 1 costs 10,
// a false alarm costs 1.

#ifndef BAP_COIN_TOSS_H_
#define BAP_COIN_TOSS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "bap/finite_game.h"

namespace bap {

FiniteGame CoinGame();

// Releases X flipped with probability omega. Release labels "0", "1".
absl::StatusOr<FiniteMechanism> RandomizedResponseMechanism(double omega);

// Threshold decision rules indexed by the complementary label: these are
// the Bayes decisions after observing 1 - eta from
// RandomizedResponseMechanism(omega), with the weak and strict inequalities
// fixed at omega = 1/2, 3/13 and 10/13. Bob returns 0 or 0.5; Eve 0 or 1.
double RrBobDecision(int eta, double omega);
int RrEveDecision(int eta, double omega);

struct RrRisks {
  double r_b = 0.0;
  double r_e = 0.0;
};

absl::StatusOr<RrRisks> RandomizedResponseRisks(double omega);

struct RrOptimum {
  double omega = 0.0;  // smallest element of the optimal set
  double r_a = 0.0;
};

absl::StatusOr<RrOptimum> RandomizedResponseOptimum(double lambda);

struct CoinTableRow {
  std::string mechanism;
  RiskTriple risks;
  double parameter = 0.0;  // omega for the randomized row
};

// Full, null, best randomized response and LP-optimal rows.
absl::StatusOr<std::vector<CoinTableRow>> CoinTossTable(double lambda);

struct CoinSweep {
  double lambda = 0.0;
  std::vector<double> omega;
  std::vector<RiskTriple> rows;
  double lp_optimum = 0.0;  // R_A of the LP-optimal mechanism
  double full_level = 0.0;  // R_A of the full release
  double null_level = 0.0;  // R_A of the null release
};

absl::StatusOr<CoinSweep> CoinTossSweep(const std::vector<double>& omega,
                                        double lambda);

}  // namespace bap

#endif  // BAP_COIN_TOSS_H_
