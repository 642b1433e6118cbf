// Copyright 2026 The cfr-forge Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "cfr_forge/counterfactual.hpp"
#include "cfr_forge/games.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfr_forge;

TEST_CASE("single-member infoset next to a terminal") {
  // Chance 0.5 / 0.5, then player 0 picks between u = 1 and u = 0 on the
  // left; the right branch is a terminal.
  GameTreeBuilder b("edge");
  const std::array probs{0.5, 0.5};
  const NodeId c = b.make_chance(b.root(), probs);
  const NodeId d = b.make_decision(c, PlayerId::kPlayer0, "I", 2);
  b.make_terminal(d, 1.0);
  b.make_terminal(d + 1, 0.0);
  b.make_terminal(c + 1, -1.0);
  const GameTree t = std::move(b).finish();
  const CounterfactualValues v =
      counterfactual_values(t, StrategyProfile::uniform(t), PlayerId::kPlayer0);
  CHECK(v.at(t, 0)[0] == 0.5);
  CHECK(v.at(t, 0)[1] == 0.0);
  CHECK(v.expected_utility == doctest::Approx(0.5 * 0.5 - 0.5));
}

TEST_CASE("zero opponent reach gives zero values") {
  const GameTree t = build_kuhn();
  StrategyProfile p = StrategyProfile::uniform(t);
  // Player 0 never bets, so player 1's "b" infosets are unreachable.
  for (InfosetId id : t.infosets_of(PlayerId::kPlayer0)) {
    p.set(id, std::vector<double>{1.0, 0.0});
  }
  const CounterfactualValues v = counterfactual_values(t, p, PlayerId::kPlayer1);
  int checked = 0;
  for (InfosetId id : t.infosets_of(PlayerId::kPlayer1)) {
    if (t.infoset(id).key.back() != 'b') continue;
    for (double x : v.at(t, id)) CHECK(x == 0.0);
    ++checked;
  }
  CHECK(checked == 3);
}

TEST_CASE("Kuhn values under the uniform profile match the rules oracle") {
  const GameTree t = build_kuhn();
  const StrategyProfile p = StrategyProfile::uniform(t);
  const auto keyed = oracle::to_keyed(t, p);
  for (int i = 0; i < 2; ++i) {
    const PlayerId player = static_cast<PlayerId>(i);
    const CounterfactualValues v = counterfactual_values(t, p, player);
    const auto expected = oracle::kuhn_counterfactual_values(keyed, i);
    for (InfosetId id : t.infosets_of(player)) {
      const auto& want = expected.at(t.infoset(id).key);
      for (std::size_t a = 0; a < 2; ++a) CHECK(std::abs(v.at(t, id)[a] - want[a]) <= 1e-12);
    }
    CHECK(std::abs(v.expected_utility - oracle::kuhn_utility(keyed, i)) <= 1e-12);
  }
}

TEST_CASE("Leduc values match terminal enumeration") {
  const GameTree t = build_leduc(3);
  for (std::uint64_t seed : {3u, 4u}) {
    const StrategyProfile p = oracle::random_profile(t, seed, 0.1);
    for (PlayerId player : {PlayerId::kPlayer0, PlayerId::kPlayer1}) {
      const CounterfactualValues v = counterfactual_values(t, p, player);
      const auto want = oracle::enumerate_counterfactual_values(t, p, player);
      for (InfosetId id : t.infosets_of(player)) {
        const auto got = v.at(t, id);
        for (std::size_t a = 0; a < got.size(); ++a) {
          CHECK(std::abs(got[a] - want[t.action_offset(id) + a]) <= 1e-12);
        }
      }
      CHECK(std::abs(v.expected_utility - oracle::enumerate_utility(t, p, player)) <= 1e-12);
    }
  }
}

TEST_CASE("own reach is the product of the player's choices") {
  const GameTree t = build_kuhn();
  const StrategyProfile p = oracle::random_profile(t, 9);
  const CounterfactualValues v = counterfactual_values(t, p, PlayerId::kPlayer0);
  for (InfosetId id : t.infosets_of(PlayerId::kPlayer0)) {
    const std::string& key = t.infoset(id).key;
    if (key.back() == ':') {
      CHECK(v.own_reach[static_cast<std::size_t>(id)] == 1.0);
    } else {
      // "P0:<c>:pb": player 0 passed first.
      const std::string root = key.substr(0, key.size() - 2);
      for (InfosetId r : t.infosets_of(PlayerId::kPlayer0)) {
        if (t.infoset(r).key == root) {
          CHECK(v.own_reach[static_cast<std::size_t>(id)] == p.at(r)[0]);
        }
      }
    }
  }
}

TEST_CASE("evaluator reports infosets without a strategy") {
  const GameTree t = build_kuhn();
  CounterfactualEvaluator eval(t);
  CHECK_THROWS_AS(eval.evaluate(StrategyProfile::empty(t), PlayerId::kPlayer0),
                  MissingStrategyError);
}

TEST_CASE("instantaneous regret examples") {
  const std::vector<double> r = instantaneous_regret(std::vector<double>{1, 0},
                                                     std::vector<double>{0.5, 0.5});
  CHECK(r == std::vector<double>{0.5, -0.5});
  const std::vector<double> best =
      instantaneous_regret(std::vector<double>{0.2, 0.7, -0.1}, std::vector<double>{0, 1, 0});
  CHECK(best[1] == 0.0);
  for (double x : best) CHECK(x <= 0.0);
  CHECK_THROWS_AS(instantaneous_regret(std::vector<double>{1, 2}, std::vector<double>{1}),
                  std::invalid_argument);
}

TEST_CASE("instantaneous regret is orthogonal to the strategy") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<double> v(n), s(n);
    for (double& x : v) x = u(rng);
    for (double& x : s) x = w(rng);
    const double sum = std::accumulate(s.begin(), s.end(), 0.0);
    for (double& x : s) x /= sum;
    const auto r = instantaneous_regret(v, s);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += r[i] * s[i];
    CHECK(std::abs(dot) <= 1e-15);
  }
}
