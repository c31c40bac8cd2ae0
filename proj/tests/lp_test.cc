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

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include "bap/evaluate.h"
#include "bap/mechanism_lp.h"
#include "bap/simplex.h"
#include "test_games.h"

namespace bap {
namespace {

using ::bap::testing::HandCoinGame;
using ::bap::testing::HandRandomizedResponse;
using ::bap::testing::RandomGame;
using ::bap::testing::RandomMechanism;
using ::testing::HasSubstr;

// Solves the square system M y = r by Gaussian elimination with partial
// pivoting; nullopt when singular.
std::optional<std::vector<double>> SolveSquare(std::vector<std::vector<double>> m,
                                               std::vector<double> r) {
  const int n = static_cast<int>(r.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    }
    if (std::abs(m[piv][col]) < 1e-10) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(r[piv], r[col]);
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = m[i][col] / m[col][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      r[i] -= f * r[col];
    }
  }
  for (int i = 0; i < n; ++i) r[i] /= m[i][i];
  return r;
}

// Minimum over all basic feasible points: every choice of n active
// constraints that includes all equalities. Assumes a bounded region.
std::optional<double> BruteForceMinimum(const LinearProgram& lp) {
  const int n = lp.num_variables();
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (int r = 0; r < lp.a_le.rows(); ++r) {
    rows.emplace_back(lp.a_le.row(r), lp.a_le.row(r) + n);
    rhs.push_back(lp.b_le[r]);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<double> e(n, 0.0);
    e[v] = 1.0;
    rows.push_back(e);
    rhs.push_back(0.0);
  }
  const int m_eq = lp.a_eq.rows();
  const int pick = n - m_eq;
  if (pick < 0) return std::nullopt;
  std::optional<double> best;
  const int total = static_cast<int>(rows.size());
  std::vector<int> mask(total, 0);
  std::fill(mask.begin(), mask.begin() + std::min(pick, total), 1);
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<std::vector<double>> sys;
    std::vector<double> b;
    for (int r = 0; r < m_eq; ++r) {
      sys.emplace_back(lp.a_eq.row(r), lp.a_eq.row(r) + n);
      b.push_back(lp.b_eq[r]);
    }
    for (int i = 0; i < total; ++i) {
      if (mask[i]) {
        sys.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
    }
    if (static_cast<int>(sys.size()) != n) continue;
    auto x = SolveSquare(sys, b);
    if (!x || MaxConstraintViolation(lp, *x) > 1e-9) continue;
    double obj = 0.0;
    for (int v = 0; v < n; ++v) obj += lp.cost[v] * (*x)[v];
    if (!best || obj < *best) best = obj;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return best;
}

LinearProgram Make(std::vector<double> c, std::vector<std::vector<double>> eq,
                   std::vector<double> beq, std::vector<std::vector<double>> le,
                   std::vector<double> ble) {
  LinearProgram lp;
  lp.cost = std::move(c);
  const int n = lp.num_variables();
  lp.a_eq = eq.empty() ? Matrix(0, n) : Matrix::FromRows(eq).value();
  lp.b_eq = std::move(beq);
  lp.a_le = le.empty() ? Matrix(0, n) : Matrix::FromRows(le).value();
  lp.b_le = std::move(ble);
  return lp;
}

TEST(SimplexTest, LowerBoundViaInequality) {
  const auto sol = SolveLinearProgram(Make({1.0}, {}, {}, {{-1.0}}, {-1.0}));
  ASSERT_TRUE(sol.ok());
  EXPECT_EQ(sol->status, LPStatus::kOptimal);
  EXPECT_NEAR(sol->x[0], 1.0, 1e-12);
  EXPECT_NEAR(sol->objective, 1.0, 1e-12);
}

TEST(SimplexTest, SimplexEquality) {
  const auto sol =
      SolveLinearProgram(Make({-1.0, -1.0}, {{1.0, 1.0}}, {1.0}, {}, {}));
  ASSERT_TRUE(sol.ok());
  EXPECT_EQ(sol->status, LPStatus::kOptimal);
  EXPECT_NEAR(sol->objective, -1.0, 1e-12);
}

TEST(SimplexTest, DetectsInfeasible) {
  const auto sol = SolveLinearProgram(
      Make({1.0, 1.0}, {{1.0, 1.0}}, {1.0}, {{1.0, 1.0}}, {0.5}));
  ASSERT_TRUE(sol.ok());
  EXPECT_EQ(sol->status, LPStatus::kInfeasible);
}

TEST(SimplexTest, DetectsUnbounded) {
  const auto sol =
      SolveLinearProgram(Make({-1.0, 0.0}, {}, {}, {{0.0, 1.0}}, {1.0}));
  ASSERT_TRUE(sol.ok());
  EXPECT_EQ(sol->status, LPStatus::kUnbounded);
}

TEST(SimplexTest, RejectsDimensionMismatch) {
  LinearProgram lp = Make({1.0, 2.0}, {}, {}, {{1.0, 1.0}}, {1.0});
  lp.b_le.push_back(3.0);
  EXPECT_EQ(SolveLinearProgram(lp).status().code(),
            absl::StatusCode::kInvalidArgument);
  LinearProgram bad = Make({1.0}, {}, {}, {}, {});
  bad.cost[0] = std::numeric_limits<double>::infinity();
  EXPECT_FALSE(SolveLinearProgram(bad).ok());
}

TEST(SimplexTest, RedundantEqualities) {
  const auto sol = SolveLinearProgram(Make(
      {1.0, 2.0, 3.0}, {{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}}, {1.0, 2.0}, {}, {}));
  ASSERT_TRUE(sol.ok());
  EXPECT_EQ(sol->status, LPStatus::kOptimal);
  EXPECT_NEAR(sol->objective, 1.0, 1e-12);
}

TEST(SimplexTest, MatchesVertexEnumerationOnRandomPrograms) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> dim(1, 4);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = dim(rng);
    const int m_eq = std::uniform_int_distribution<int>(0, std::min(2, n))(rng);
    const int m_le = std::uniform_int_distribution<int>(0, 3)(rng);
    LinearProgram lp;
    for (int v = 0; v < n; ++v) lp.cost.push_back(u(rng));
    lp.a_eq = Matrix(m_eq, n);
    for (int r = 0; r < m_eq; ++r) {
      for (int v = 0; v < n; ++v) lp.a_eq(r, v) = u(rng);
      lp.b_eq.push_back(u(rng));
    }
    // The last inequality bounds the region.
    lp.a_le = Matrix(m_le + 1, n);
    for (int r = 0; r < m_le; ++r) {
      for (int v = 0; v < n; ++v) lp.a_le(r, v) = u(rng);
      lp.b_le.push_back(u(rng));
    }
    for (int v = 0; v < n; ++v) lp.a_le(m_le, v) = 1.0;
    lp.b_le.push_back(5.0);

    const auto sol = SolveLinearProgram(lp);
    ASSERT_TRUE(sol.ok());
    const auto oracle = BruteForceMinimum(lp);
    if (!oracle) {
      EXPECT_EQ(sol->status, LPStatus::kInfeasible) << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(sol->status, LPStatus::kOptimal) << trial;
    EXPECT_NEAR(sol->objective, *oracle, 1e-8) << trial;
    EXPECT_LE(MaxConstraintViolation(lp, sol->x), 1e-8) << trial;
    for (double v : sol->x) EXPECT_GE(v, -1e-10);
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
  EXPECT_GT(infeasible, 10);
}

TEST(MechanismLPTest, CoinTossShape) {
  const MechanismLP mlp = BuildMechanismLP(HandCoinGame(), 1.0 / 3.0).value();
  EXPECT_EQ(mlp.lp.num_variables(), 8);
  EXPECT_EQ(mlp.lp.a_eq.rows(), 2);
  EXPECT_EQ(mlp.lp.a_le.rows(), 8);
  EXPECT_EQ(mlp.le_labels.size(), 8u);
  EXPECT_NEAR(mlp.lp.b_eq[0], 0.75, 1e-15);
  EXPECT_NEAR(mlp.lp.b_eq[1], 0.25, 1e-15);
}

TEST(MechanismLPTest, CoinTossExpectedBobLoss) {
  const FiniteGame game = HandCoinGame();
  const Matrix& lb = game.expected_bob_loss();
  EXPECT_NEAR(lb(0, 0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(lb(0, 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(lb(1, 0), 1.0, 1e-15);
  EXPECT_NEAR(lb(1, 1), 0.0, 1e-15);
  // Cost of rho[i=0, j=1 | k=0] is 1/3 - lambda * 1.
  const MechanismLP mlp = BuildMechanismLP(game, 0.25).value();
  EXPECT_NEAR(mlp.lp.cost[mlp.Index(0, 1, 0)], 1.0 / 3.0 - 0.25, 1e-15);
}

TEST(MechanismLPTest, CoinTossOptimumAtCalibratedLambda) {
  const FiniteGame game = HandCoinGame();
  const MechanismLP mlp = BuildMechanismLP(game, 1.0 / 3.0).value();
  const LPSolution sol = SolveLinearProgram(mlp.lp).value();
  ASSERT_EQ(sol.status, LPStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 3.0 / 40.0, 1e-10);

  // The known closed-form solution is feasible and attains the same value.
  std::vector<double> rho(8, 0.0);
  rho[mlp.Index(0, 1, 0)] = 0.75;
  rho[mlp.Index(0, 1, 1)] = 0.25 * 0.3;
  rho[mlp.Index(1, 1, 1)] = 0.25 * 0.7;
  EXPECT_LE(MaxConstraintViolation(mlp.lp, rho), 1e-12);
  double value = 0.0;
  for (int v = 0; v < 8; ++v) value += mlp.lp.cost[v] * rho[v];
  EXPECT_NEAR(value, sol.objective, 1e-10);
  const FiniteMechanism known = DecodeMechanism(mlp, rho).value();
  EXPECT_NEAR(known.q(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(known.q(1, 1), 0.3, 1e-12);
  EXPECT_NEAR(known.q(1, 3), 0.7, 1e-12);
  const RiskTriple risks =
      EvaluateMechanism(game, known, RiskWeights{1.0 / 3.0}).value();
  EXPECT_NEAR(risks.r_b, 13.0 / 40.0, 1e-12);
  EXPECT_NEAR(risks.r_e, 0.75, 1e-12);
  EXPECT_NEAR(risks.r_a, 3.0 / 40.0, 1e-12);
}

TEST(MechanismLPTest, SolveOptimalMechanismCoinToss) {
  const FiniteGame game = HandCoinGame();
  const OptimalMechanism opt = SolveOptimalMechanism(game, 1.0 / 3.0).value();
  EXPECT_NEAR(opt.risks.r_a, 0.075, 1e-9);
  EXPECT_NEAR(opt.risks.r_b, 0.325, 1e-9);
  EXPECT_NEAR(opt.risks.r_e, 0.75, 1e-9);
  EXPECT_EQ(opt.mechanism.num_releases(), 4);
  EXPECT_EQ(opt.mechanism.releases()[1], "(0,1)");
  EXPECT_NEAR(SolveOptimalMechanism(game, 0.05)->risks.r_a, 0.25, 1e-9);
  EXPECT_NEAR(SolveOptimalMechanism(game, 0.0)->lp_objective, 0.25, 1e-9);
}

TEST(MechanismLPTest, CoinTossPiecewiseLaw) {
  const FiniteGame game = HandCoinGame();
  for (int i = 0; i < 50; ++i) {
    const double lambda = i / 49.0;
    const double want = lambda <= 0.1 ? 0.25 : 13.0 / 40.0 - 0.75 * lambda;
    const auto opt = SolveOptimalMechanism(game, lambda);
    ASSERT_TRUE(opt.ok()) << opt.status();
    EXPECT_NEAR(opt->lp_objective, want, 1e-8) << lambda;
  }
}

TEST(MechanismLPTest, NullEncodingIsFeasible) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteGame game = RandomGame(rng);
    const MechanismLP mlp = BuildMechanismLP(game, 0.5).value();
    std::vector<double> prior(game.num_parameters());
    for (int t = 0; t < game.num_parameters(); ++t) prior[t] = game.prior(t);
    const int i = ChooseBayesDecision(prior, game.bob_loss())->index;
    const int j =
        ChooseBayesDecision(game.prior_predictive(), game.eve_loss())->index;
    std::vector<double> rho(mlp.lp.num_variables(), 0.0);
    for (int k = 0; k < game.num_data(); ++k) {
      rho[mlp.Index(i, j, k)] = game.prior_predictive()[k];
    }
    EXPECT_LE(MaxConstraintViolation(mlp.lp, rho), 1e-12);
  }
}

TEST(MechanismLPTest, RandomGamesCrossValidateAndDominate) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> lambda_dist(0.0, 2.0);
  for (int trial = 0; trial < 150; ++trial) {
    const FiniteGame game = RandomGame(rng);
    const double lambda = lambda_dist(rng);
    const auto opt = SolveOptimalMechanism(game, lambda);
    ASSERT_TRUE(opt.ok()) << opt.status();
    EXPECT_NEAR(opt->risks.r_a, opt->lp_objective, 1e-8);
    const RiskWeights w{lambda};
    const double full =
        EvaluateMechanism(game, FiniteMechanism::Full(game), w)->r_a;
    const double null =
        EvaluateMechanism(game, FiniteMechanism::Null(game), w)->r_a;
    EXPECT_LE(opt->lp_objective, full + 1e-9);
    EXPECT_LE(opt->lp_objective, null + 1e-9);
    for (int m = 0; m < 5; ++m) {
      const FiniteMechanism mech =
          RandomMechanism(rng, game.num_data(), 2 + m % 3);
      EXPECT_LE(opt->lp_objective, EvaluateMechanism(game, mech, w)->r_a + 1e-9);
    }
  }
}

TEST(MechanismLPTest, CoinTossBeatsRandomizedResponse) {
  const FiniteGame game = HandCoinGame();
  for (int i = 0; i <= 20; ++i) {
    const double lambda = i / 20.0;
    const double lp = SolveOptimalMechanism(game, lambda)->lp_objective;
    for (int w = 0; w <= 100; ++w) {
      EXPECT_LE(lp, EvaluateMechanism(game, HandRandomizedResponse(w / 100.0),
                                      RiskWeights{lambda})
                            ->r_a +
                        1e-9);
    }
  }
}

TEST(MechanismLPTest, DumpListsLabelledRows) {
  const MechanismLP mlp = BuildMechanismLP(HandCoinGame(), 1.0 / 3.0).value();
  const std::string dump = DumpMechanismLP(mlp);
  EXPECT_THAT(dump, HasSubstr("8 variables, 2 equalities, 8 inequalities"));
  EXPECT_THAT(dump, HasSubstr("minimize: "));
  EXPECT_THAT(dump, HasSubstr("mass[0]: "));
  EXPECT_THAT(dump, HasSubstr("bob(0,1) vs 1/2: "));
  EXPECT_THAT(dump, HasSubstr("eve(1/2,0) vs 1: "));
  EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 1 + 1 + 2 + 8);
}

TEST(MechanismLPTest, RejectsNegativeLambda) {
  EXPECT_FALSE(BuildMechanismLP(HandCoinGame(), -0.1).ok());
}

}  // namespace
}  // namespace bap
