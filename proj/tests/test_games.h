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

// Random finite games and mechanisms for property tests.

#ifndef BAP_TESTS_TEST_GAMES_H_
#define BAP_TESTS_TEST_GAMES_H_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bap/finite_game.h"
#include "bap/matrix.h"

namespace bap::testing {

inline std::vector<double> RandomDistribution(std::mt19937_64& rng, int n) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) total += (v = gamma(rng));
  for (double& v : p) v /= total;
  // Absorb rounding so the sum is 1 to the last bit that matters.
  double rest = 1.0;
  for (int i = 0; i + 1 < n; ++i) rest -= p[i];
  p[n - 1] = rest;
  return p;
}

inline Matrix RandomStochastic(std::mt19937_64& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const std::vector<double> p = RandomDistribution(rng, cols);
    for (int c = 0; c < cols; ++c) m(r, c) = p[c];
  }
  return m;
}

inline Matrix RandomLoss(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_real_distribution<double> u(0.0, 5.0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = u(rng);
  }
  return m;
}

inline std::vector<std::string> Labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Sizes are drawn from [1, max_size] (data and decisions from [2, max_size]).
inline FiniteGame RandomGame(std::mt19937_64& rng, int max_size = 3) {
  std::uniform_int_distribution<int> size1(1, max_size);
  std::uniform_int_distribution<int> size2(2, max_size);
  const int nt = size1(rng), nx = size2(rng), nb = size2(rng),
            ne = size2(rng);
  GameTables t;
  t.parameters = Labels("t", nt);
  t.prior = RandomDistribution(rng, nt);
  t.data = Labels("x", nx);
  t.likelihood = RandomStochastic(rng, nt, nx);
  t.bob_decisions = Labels("b", nb);
  t.eve_decisions = Labels("e", ne);
  t.bob_loss = RandomLoss(rng, nt, nb);
  t.eve_loss = RandomLoss(rng, nx, ne);
  return FiniteGame::Create(std::move(t)).value();
}

inline FiniteMechanism RandomMechanism(std::mt19937_64& rng, int num_data,
                                       int num_releases) {
  return FiniteMechanism::Create(Labels("h", num_releases),
                                 RandomStochastic(rng, num_data, num_releases))
      .value();
}

// Hand-built coin game, independent of the library's CoinGame().
inline FiniteGame HandCoinGame() {
  GameTables t;
  t.parameters = {"0", "1/2"};
  t.prior = {0.5, 0.5};
  t.data = {"0", "1"};
  t.likelihood = Matrix(2, 2);
  t.likelihood(0, 0) = 1.0;
  t.likelihood(1, 0) = 0.5;
  t.likelihood(1, 1) = 0.5;
  t.bob_decisions = {"0", "1/2"};
  t.eve_decisions = {"0", "1"};
  t.bob_loss = Matrix(2, 2);
  t.bob_loss(0, 1) = 1.0;
  t.bob_loss(1, 0) = 1.0;
  t.eve_loss = Matrix(2, 2);
  t.eve_loss(0, 1) = 1.0;
  t.eve_loss(1, 0) = 10.0;
  return FiniteGame::Create(std::move(t)).value();
}

inline FiniteMechanism HandRandomizedResponse(double omega) {
  Matrix k(2, 2);
  k(0, 0) = 1.0 - omega;
  k(0, 1) = omega;
  k(1, 0) = omega;
  k(1, 1) = 1.0 - omega;
  return FiniteMechanism::Create({"0", "1"}, std::move(k)).value();
}

}  // namespace bap::testing

#endif  // BAP_TESTS_TEST_GAMES_H_
