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

#include "cfr_forge/exploitability.hpp"
#include "cfr_forge/games.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfr_forge;

TEST_CASE("single decision best response") {
  GameTreeBuilder b("pick");
  const NodeId d = b.make_decision(b.root(), PlayerId::kPlayer0, "I", 2);
  b.make_terminal(d, 0.3);
  b.make_terminal(d + 1, -0.2);
  const GameTree t = std::move(b).finish();
  StrategyProfile p = StrategyProfile::uniform(t);
  CHECK(best_response_value(t, p, PlayerId::kPlayer0).value == 0.3);
  p.set(0, std::array<double, 2>{0.0, 1.0});
  CHECK(best_response_value(t, p, PlayerId::kPlayer0).value == 0.3);
  CHECK(best_response_value(t, StrategyProfile::empty(t), PlayerId::kPlayer0).value == 0.3);
}

TEST_CASE("uniform Kuhn matches pure-strategy enumeration") {
  const GameTree t = build_kuhn();
  const StrategyProfile p = StrategyProfile::uniform(t);
  const auto keyed = oracle::to_keyed(t, p);
  const double br0 = oracle::kuhn_best_response(keyed, 0);
  const double br1 = oracle::kuhn_best_response(keyed, 1);
  CHECK(std::abs(best_response_value(t, p, PlayerId::kPlayer0).value - br0) <= 1e-12);
  CHECK(std::abs(best_response_value(t, p, PlayerId::kPlayer1).value - br1) <= 1e-12);
  CHECK(std::abs(exploitability(t, p) - (br0 + br1) / 2.0) <= 1e-12);
  // 0.4583 chips: the textbook value for uniform play.
  CHECK(exploitability(t, p) / t.payoff_scale() == doctest::Approx(0.458333333333).epsilon(1e-9));
}

TEST_CASE("the analytic Kuhn equilibria are unexploitable") {
  const GameTree t = build_kuhn();
  for (double alpha : {0.0, 0.1, 0.2, 1.0 / 3.0}) {
    CAPTURE(alpha);
    const StrategyProfile ne = oracle::from_keyed(t, oracle::kuhn_equilibrium(alpha));
    const double u0 = expected_utility(t, ne, PlayerId::kPlayer0);
    CHECK(u0 == doctest::Approx(-1.0 / 36.0).epsilon(1e-12));
    CHECK(std::abs(best_response_value(t, ne, PlayerId::kPlayer0).value - u0) <= 1e-9);
    CHECK(std::abs(best_response_value(t, ne, PlayerId::kPlayer1).value + u0) <= 1e-9);
    CHECK(exploitability(t, ne) <= 1e-9);
    CHECK(exploitability(t, ne) >= 0.0);
  }
}

TEST_CASE("best response ignores the responder's own strategy") {
  const GameTree t = build_leduc(3);
  const StrategyProfile a = oracle::random_profile(t, 21);
  const StrategyProfile b = oracle::random_profile(t, 22);
  for (PlayerId i : {PlayerId::kPlayer0, PlayerId::kPlayer1}) {
    StrategyProfile mixed = StrategyProfile::empty(t);
    for (const Infoset& info : t.infosets()) {
      mixed.set(info.id, info.player == i ? b.at(info.id) : a.at(info.id));
    }
    CHECK(best_response_value(t, a, i).value == best_response_value(t, mixed, i).value);
  }
}

TEST_CASE("best response weakly improves on the profile") {
  for (const GameTree& t : {build_kuhn(), build_leduc(3), build_liars_dice(3)}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const StrategyProfile p = oracle::random_profile(t, seed, 0.3);
      for (PlayerId i : {PlayerId::kPlayer0, PlayerId::kPlayer1}) {
        CHECK(best_response_value(t, p, i).value >= expected_utility(t, p, i) - 1e-12);
      }
      CHECK(exploitability(t, p) >= 0.0);
    }
  }
}

TEST_CASE("exploitability is invariant under node reordering") {
  for (const GameTree& t : {build_kuhn(), build_leduc(3)}) {
    const StrategyProfile p = oracle::random_profile(t, 33, 0.2);
    const double base = exploitability(t, p);
    for (std::uint64_t seed : {1u, 2u}) {
      const oracle::ShuffledTree sh = oracle::shuffle_tree(t, seed);
      const StrategyProfile q = oracle::carry_profile(t, sh, p);
      CHECK(std::abs(exploitability(sh.tree, q) - base) <= 1e-12);
    }
  }
}

TEST_CASE("missing opponent strategies are reported") {
  const GameTree t = build_kuhn();
  CHECK_THROWS_AS(exploitability(t, StrategyProfile::empty(t)), MissingStrategyError);
}
