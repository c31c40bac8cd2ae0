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
#include <numeric>
#include <random>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include "bap/evaluate.h"
#include "bap/finite_game.h"
#include "bap/game_json.h"
#include "test_games.h"

namespace bap {
namespace {

using ::bap::testing::HandCoinGame;
using ::bap::testing::HandRandomizedResponse;
using ::bap::testing::RandomGame;
using ::bap::testing::RandomMechanism;
using ::testing::HasSubstr;

constexpr double kExact = 1e-12;

TEST(FiniteGameTest, PriorPredictiveAndPosterior) {
  const FiniteGame game = HandCoinGame();
  EXPECT_NEAR(game.prior_predictive()[0], 0.75, kExact);
  EXPECT_NEAR(game.prior_predictive()[1], 0.25, kExact);
  EXPECT_NEAR(game.parameter_posterior()(0, 0), 2.0 / 3.0, kExact);
  EXPECT_NEAR(game.parameter_posterior()(0, 1), 1.0 / 3.0, kExact);
  EXPECT_NEAR(game.parameter_posterior()(1, 1), 1.0, kExact);
}

TEST(FiniteGameTest, RejectsBadTables) {
  GameTables t = HandCoinGame().tables();
  t.likelihood(1, 1) = 0.4;
  auto status = FiniteGame::Create(t).status();
  EXPECT_EQ(status.code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(std::string(status.message()), HasSubstr("likelihood[1]"));

  t = HandCoinGame().tables();
  t.prior = {0.5, 0.6};
  EXPECT_THAT(std::string(FiniteGame::Create(t).status().message()),
              HasSubstr("prior"));

  t = HandCoinGame().tables();
  t.eve_loss(1, 0) = -1.0;
  EXPECT_THAT(std::string(FiniteGame::Create(t).status().message()),
              HasSubstr("eve_loss[1][0]"));

  t = HandCoinGame().tables();
  t.bob_decisions.push_back("extra");
  EXPECT_THAT(std::string(FiniteGame::Create(t).status().message()),
              HasSubstr("bob_loss"));

  t = HandCoinGame().tables();
  t.eve_decisions.clear();
  EXPECT_FALSE(FiniteGame::Create(t).ok());
}

TEST(FiniteMechanismTest, RejectsNonStochasticKernel) {
  Matrix k(2, 2, 0.5);
  k(1, 0) = 0.6;
  auto status = FiniteMechanism::Create({"a", "b"}, k).status();
  EXPECT_THAT(std::string(status.message()), HasSubstr("kernel[1]"));
  EXPECT_FALSE(FiniteMechanism::Create({"a"}, Matrix(2, 2, 0.5)).ok());
}

TEST(RiskWeightsTest, Validate) {
  EXPECT_TRUE(RiskWeights{0.0}.Validate().ok());
  EXPECT_FALSE(RiskWeights{-0.1}.Validate().ok());
  EXPECT_FALSE(RiskWeights{std::nan("")}.Validate().ok());
}

TEST(PosteriorOverDataTest, FullNullAndRandomizedResponse) {
  const FiniteGame game = HandCoinGame();
  const auto full = PosteriorOverData(game, FiniteMechanism::Full(game), 1);
  ASSERT_TRUE(full.ok());
  EXPECT_EQ(*full, (std::vector<double>{0.0, 1.0}));
  const auto null = PosteriorOverData(game, FiniteMechanism::Null(game), 0);
  ASSERT_TRUE(null.ok());
  EXPECT_NEAR((*null)[0], 0.75, kExact);
  EXPECT_NEAR((*null)[1], 0.25, kExact);
  // (3/4 * 1/4) / (3/4 * 1/4 + 1/4 * 3/4) = 1/2.
  const auto rr = PosteriorOverData(game, HandRandomizedResponse(0.25), 1);
  ASSERT_TRUE(rr.ok());
  EXPECT_NEAR((*rr)[1], 0.5, kExact);
}

TEST(PosteriorOverDataTest, ZeroMassReleaseRejected) {
  const FiniteGame game = HandCoinGame();
  Matrix k(2, 3);
  k(0, 0) = 1.0;
  k(1, 1) = 1.0;
  const FiniteMechanism mech =
      FiniteMechanism::Create({"a", "b", "never"}, k).value();
  EXPECT_EQ(PosteriorOverData(game, mech, 2).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(PosteriorOverData(game, mech, 3).status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(ChooseBayesDecisionTest, Examples) {
  const Matrix zero_one = Matrix::FromRows({{0, 1}, {1, 0}}).value();
  auto point = ChooseBayesDecision({0.0, 1.0}, zero_one);
  ASSERT_TRUE(point.ok());
  EXPECT_EQ(point->index, 1);
  EXPECT_EQ(point->expected_loss, 0.0);

  const Matrix eve = Matrix::FromRows({{0, 1}, {10, 0}}).value();
  auto prior = ChooseBayesDecision({0.75, 0.25}, eve);
  ASSERT_TRUE(prior.ok());
  EXPECT_EQ(prior->index, 1);
  EXPECT_NEAR(prior->expected_loss, 0.75, kExact);

  auto tie = ChooseBayesDecision({0.5, 0.5}, zero_one);
  ASSERT_TRUE(tie.ok());
  EXPECT_EQ(tie->index, 0);
  EXPECT_EQ(tie->expected_loss, 0.5);
}

TEST(ChooseBayesDecisionTest, RejectsEmptyDecisionSet) {
  EXPECT_FALSE(ChooseBayesDecision({1.0}, Matrix(1, 0)).ok());
  EXPECT_FALSE(ChooseBayesDecision({0.5, 0.5}, Matrix(3, 2)).ok());
}

TEST(EvaluateMechanismTest, CoinTossExamples) {
  const FiniteGame game = HandCoinGame();
  const RiskWeights w{1.0 / 3.0};
  const RiskTriple full =
      EvaluateMechanism(game, FiniteMechanism::Full(game), w).value();
  EXPECT_NEAR(full.r_b, 0.25, kExact);
  EXPECT_NEAR(full.r_e, 0.0, kExact);
  EXPECT_NEAR(full.r_a, 0.25, kExact);
  const RiskTriple null =
      EvaluateMechanism(game, FiniteMechanism::Null(game), w).value();
  EXPECT_NEAR(null.r_b, 0.5, kExact);
  EXPECT_NEAR(null.r_e, 0.75, kExact);
  EXPECT_NEAR(null.r_a, 0.25, kExact);
  const RiskTriple rr =
      EvaluateMechanism(game, HandRandomizedResponse(3.0 / 13.0), w).value();
  EXPECT_NEAR(rr.r_b, 19.0 / 52.0, kExact);
  EXPECT_NEAR(rr.r_e, 0.75, kExact);
  EXPECT_NEAR(rr.r_a, 3.0 / 26.0, kExact);
  EXPECT_EQ(rr.lambda, w.lambda);
}

TEST(EvaluateMechanismTest, RejectsIncompatibleMechanism) {
  const FiniteGame game = HandCoinGame();
  const FiniteMechanism mech =
      FiniteMechanism::Create({"a"}, Matrix(3, 1, 1.0)).value();
  EXPECT_FALSE(EvaluateMechanism(game, mech, RiskWeights{0.0}).ok());
  EXPECT_FALSE(EvaluateMechanism(game, FiniteMechanism::Full(game),
                                 RiskWeights{-1.0})
                   .ok());
}

TEST(EvaluateMechanismTest, ZeroMassReleasesSkipped) {
  const FiniteGame game = HandCoinGame();
  Matrix k(2, 3);
  k(0, 0) = 1.0;
  k(1, 2) = 1.0;
  const FiniteMechanism padded =
      FiniteMechanism::Create({"0", "unused", "1"}, k).value();
  const auto eval =
      EvaluateMechanismDetailed(game, padded, RiskWeights{0.5}).value();
  EXPECT_EQ(eval.bob_decision[1], -1);
  EXPECT_EQ(eval.release_mass[1], 0.0);
  EXPECT_NEAR(eval.risks.r_b, 0.25, kExact);
  EXPECT_NEAR(eval.risks.r_e, 0.0, kExact);
}

TEST(EvaluateMechanismTest, NullTieBreakIsRiskNeutral) {
  // Swapping Bob's decision order flips which decision wins the tie.
  const FiniteGame game = HandCoinGame();
  GameTables swapped = game.tables();
  std::swap(swapped.bob_decisions[0], swapped.bob_decisions[1]);
  swapped.bob_loss = Matrix::FromRows({{1, 0}, {0, 1}}).value();
  const FiniteGame other = FiniteGame::Create(swapped).value();
  const auto a = EvaluateMechanismDetailed(game, FiniteMechanism::Null(game),
                                           RiskWeights{1.0 / 3.0})
                     .value();
  const auto b = EvaluateMechanismDetailed(other, FiniteMechanism::Null(other),
                                           RiskWeights{1.0 / 3.0})
                     .value();
  EXPECT_EQ(game.tables().bob_decisions[a.bob_decision[0]], "0");
  EXPECT_EQ(other.tables().bob_decisions[b.bob_decision[0]], "1/2");
  EXPECT_NEAR(a.risks.r_b, b.risks.r_b, kExact);
  EXPECT_NEAR(a.risks.r_a, b.risks.r_a, kExact);
}

TEST(CalibrateLambdaTest, Examples) {
  EXPECT_NEAR(CalibrateLambda(MakeRiskTriple(0.25, 0.0, 0.0),
                              MakeRiskTriple(0.5, 0.75, 0.0))
                  .value(),
              1.0 / 3.0, kExact);
  const auto undefined = CalibrateLambda(MakeRiskTriple(0.25, 0.5, 0.0),
                                         MakeRiskTriple(0.5, 0.5, 0.0));
  EXPECT_EQ(undefined.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_THAT(std::string(undefined.status().message()),
              HasSubstr("calibration undefined"));
}

TEST(CalibrateLambdaTest, EqualizesFullAndNull) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteGame game = RandomGame(rng);
    const RiskTriple full =
        EvaluateMechanism(game, FiniteMechanism::Full(game), {}).value();
    const RiskTriple null =
        EvaluateMechanism(game, FiniteMechanism::Null(game), {}).value();
    const auto lambda = CalibrateLambda(full, null);
    if (!lambda.ok()) continue;
    EXPECT_NEAR(full.r_b - *lambda * full.r_e, null.r_b - *lambda * null.r_e,
                1e-9);
  }
}

double MinEntry(const Matrix& m) {
  double v = m(0, 0);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) v = std::min(v, m(r, c));
  }
  return v;
}

double MaxEntry(const Matrix& m) {
  double v = m(0, 0);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) v = std::max(v, m(r, c));
  }
  return v;
}

TEST(EvaluatePropertiesTest, RisksBoundedAndTripleConsistent) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lambda(0.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteGame game = RandomGame(rng);
    const FiniteMechanism mech =
        RandomMechanism(rng, game.num_data(), 1 + trial % 4);
    const RiskTriple r =
        EvaluateMechanism(game, mech, RiskWeights{lambda(rng)}).value();
    EXPECT_GE(r.r_b, MinEntry(game.bob_loss()) - kExact);
    EXPECT_LE(r.r_b, MaxEntry(game.bob_loss()) + kExact);
    EXPECT_GE(r.r_e, MinEntry(game.eve_loss()) - kExact);
    EXPECT_LE(r.r_e, MaxEntry(game.eve_loss()) + kExact);
    EXPECT_NEAR(r.r_a, r.r_b - r.lambda * r.r_e, kExact);
  }
}

TEST(EvaluatePropertiesTest, FullReleaseEveRisk) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteGame game = RandomGame(rng);
    double want = 0.0;
    for (int x = 0; x < game.num_data(); ++x) {
      double best = game.eve_loss()(x, 0);
      for (int d = 1; d < game.num_eve_decisions(); ++d) {
        best = std::min(best, game.eve_loss()(x, d));
      }
      want += game.prior_predictive()[x] * best;
    }
    EXPECT_NEAR(
        EvaluateMechanism(game, FiniteMechanism::Full(game), {}).value().r_e,
        want, kExact);
  }
}

TEST(EvaluatePropertiesTest, RelabelingInvariance) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteGame game = RandomGame(rng);
    const int nh = 2 + trial % 3;
    const FiniteMechanism mech = RandomMechanism(rng, game.num_data(), nh);
    std::vector<int> perm(nh);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix k(game.num_data(), nh);
    std::vector<std::string> labels(nh);
    for (int h = 0; h < nh; ++h) {
      labels[perm[h]] = mech.releases()[h];
      for (int x = 0; x < game.num_data(); ++x) k(x, perm[h]) = mech.q(x, h);
    }
    const FiniteMechanism permuted =
        FiniteMechanism::Create(labels, k).value();
    const RiskTriple a = EvaluateMechanism(game, mech, {0.7}).value();
    const RiskTriple b = EvaluateMechanism(game, permuted, {0.7}).value();
    EXPECT_NEAR(a.r_b, b.r_b, kExact);
    EXPECT_NEAR(a.r_e, b.r_e, kExact);
  }
}

TEST(EvaluatePropertiesTest, NullMatchesPriorOnlyDecisions) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteGame game = RandomGame(rng);
    const RiskTriple r =
        EvaluateMechanism(game, FiniteMechanism::Null(game), {}).value();
    std::vector<double> prior(game.num_parameters());
    for (int t = 0; t < game.num_parameters(); ++t) prior[t] = game.prior(t);
    EXPECT_NEAR(r.r_b,
                ChooseBayesDecision(prior, game.bob_loss())->expected_loss,
                kExact);
    EXPECT_NEAR(r.r_e,
                ChooseBayesDecision(game.prior_predictive(), game.eve_loss())
                    ->expected_loss,
                kExact);
  }
}

TEST(EvaluatePropertiesTest, SufficientCoarseningWeaklyDominatesForEve) {
  // Data values 0 and 1 have proportional likelihood columns, so merging
  // them preserves every parameter posterior while coarsening Eve's view.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> split(0.1, 0.9);
  for (int trial = 0; trial < 100; ++trial) {
    const int nt = 2 + trial % 2;
    GameTables t;
    t.parameters = testing::Labels("t", nt);
    t.prior = testing::RandomDistribution(rng, nt);
    t.data = testing::Labels("x", 3);
    t.likelihood = Matrix(nt, 3);
    const double c = split(rng);
    for (int r = 0; r < nt; ++r) {
      const auto p = testing::RandomDistribution(rng, 2);
      t.likelihood(r, 0) = c * p[0];
      t.likelihood(r, 1) = p[0] - t.likelihood(r, 0);
      t.likelihood(r, 2) = p[1];
    }
    t.bob_decisions = testing::Labels("b", 2);
    t.eve_decisions = testing::Labels("e", 3);
    t.bob_loss = testing::RandomLoss(rng, nt, 2);
    t.eve_loss = testing::RandomLoss(rng, 3, 3);
    const FiniteGame game = FiniteGame::Create(t).value();
    Matrix merged(3, 2);
    merged(0, 0) = merged(1, 0) = merged(2, 1) = 1.0;
    const FiniteMechanism coarse =
        FiniteMechanism::Create({"01", "2"}, merged).value();
    const RiskTriple fine =
        EvaluateMechanism(game, FiniteMechanism::Full(game), {}).value();
    const RiskTriple rough = EvaluateMechanism(game, coarse, {}).value();
    EXPECT_NEAR(fine.r_b, rough.r_b, kExact);
    EXPECT_GE(rough.r_e, fine.r_e - kExact);
  }
}

TEST(GameJsonTest, RoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteGame game = RandomGame(rng);
    const FiniteGame back = GameFromJson(GameToJson(game)).value();
    EXPECT_EQ(back.tables().likelihood, game.tables().likelihood);
    EXPECT_EQ(back.tables().eve_loss, game.tables().eve_loss);
    EXPECT_EQ(back.tables().prior, game.tables().prior);
    EXPECT_EQ(back.tables().bob_decisions, game.tables().bob_decisions);
    const FiniteMechanism mech = RandomMechanism(rng, game.num_data(), 3);
    const FiniteMechanism mback =
        MechanismFromJson(MechanismToJson(mech), game).value();
    EXPECT_EQ(mback.kernel(), mech.kernel());
    EXPECT_EQ(mback.releases(), mech.releases());
  }
}

TEST(GameJsonTest, ParsesNumericLabels) {
  const auto game = ParseGame(R"({
    "parameters": [0, 0.5], "prior": [0.5, 0.5], "data": [0, 1],
    "likelihood": [[1, 0], [0.5, 0.5]],
    "bob_decisions": ["0", "1/2"], "eve_decisions": [0, 1],
    "bob_loss": [[0, 1], [1, 0]], "eve_loss": [[0, 1], [10, 0]]})");
  ASSERT_TRUE(game.ok()) << game.status();
  EXPECT_EQ(game->tables().parameters[1], "0.5");
  EXPECT_NEAR(game->prior_predictive()[1], 0.25, kExact);
}

TEST(GameJsonTest, ErrorsNameTheField) {
  const auto bad_row = ParseGame(R"({
    "parameters": ["a", "b"], "prior": [0.5, 0.5], "data": ["0", "1"],
    "likelihood": [[1, 0], [0.5, 0.4]],
    "bob_decisions": ["0", "1"], "eve_decisions": ["0", "1"],
    "bob_loss": [[0, 1], [1, 0]], "eve_loss": [[0, 1], [1, 0]]})");
  EXPECT_THAT(std::string(bad_row.status().message()),
              HasSubstr("likelihood[1] sums to 0.9"));
  const auto missing = ParseGame(R"({"parameters": ["a"]})");
  EXPECT_THAT(std::string(missing.status().message()), HasSubstr("data"));
  const auto ragged = ParseGame(R"({
    "parameters": ["a"], "prior": [1], "data": ["0", "1"],
    "likelihood": [[1]],
    "bob_decisions": ["0"], "eve_decisions": ["0"],
    "bob_loss": [[0]], "eve_loss": [[0], [0]]})");
  EXPECT_THAT(std::string(ragged.status().message()),
              HasSubstr("likelihood[0]"));
  EXPECT_FALSE(ParseGame("{not json").ok());
  const FiniteGame coin = HandCoinGame();
  EXPECT_THAT(
      std::string(ParseMechanism(R"({"releases": ["a"], "kernel": [[1]]})",
                                 coin)
                      .status()
                      .message()),
      HasSubstr("kernel"));
}

}  // namespace
}  // namespace bap
