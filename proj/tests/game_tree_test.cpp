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
#include <numeric>
#include <sstream>
#include <string>

#include "cfr_forge/game_tree.hpp"
#include "cfr_forge/games.hpp"
#include "cfr_forge/reach.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfr_forge;

namespace {

// Chance (0.5 / 0.5), then player 0 chooses among four terminals on the
// left branch and between two on the right.
GameTree chance_then_choice() {
  GameTreeBuilder b("toy");
  const std::array probs{0.5, 0.5};
  const NodeId c = b.make_chance(b.root(), probs);
  const NodeId left = b.make_decision(c, PlayerId::kPlayer0, "L", 4);
  for (int k = 0; k < 4; ++k) b.make_terminal(left + k, 0.25 * k);
  const NodeId right = b.make_decision(c + 1, PlayerId::kPlayer0, "R", 2);
  b.make_terminal(right, 1.0);
  b.make_terminal(right + 1, -1.0);
  return std::move(b).finish();
}

}  // namespace

TEST_CASE("builder assigns children contiguous ids above the parent") {
  const GameTree t = chance_then_choice();
  CHECK(t.num_nodes() == 9);
  CHECK(t.num_infosets() == 2);
  for (const Node& n : t.nodes()) {
    if (n.is_terminal()) continue;
    for (int k = 0; k < n.num_children; ++k) {
      const NodeId c = n.first_child + k;
      CHECK(c > t.node(c).parent);
    }
  }
  CHECK(t.action_offset(0) == 0);
  CHECK(t.action_offset(1) == 4);
  CHECK(t.total_actions() == 6);
  CHECK(t.utility(t.infoset(1).members[0] + 0, PlayerId::kPlayer0) == 0.0);
}

TEST_CASE("player 1 utility is the negation of player 0 utility") {
  const GameTree t = build_kuhn();
  for (NodeId id = 0; id < static_cast<NodeId>(t.num_nodes()); ++id) {
    if (!t.node(id).is_terminal()) continue;
    CHECK(t.utility(id, PlayerId::kPlayer1) == -t.utility(id, PlayerId::kPlayer0));
  }
}

TEST_CASE("finish rejects undefined placeholders") {
  GameTreeBuilder b("broken");
  const std::array probs{0.5, 0.5};
  const NodeId c = b.make_chance(b.root(), probs);
  b.make_terminal(c, 1.0);
  CHECK_THROWS_AS(std::move(b).finish(), std::logic_error);
}

TEST_CASE("builder rejects defining a node twice") {
  GameTreeBuilder b("twice");
  b.make_terminal(b.root(), 0.0);
  CHECK_THROWS_AS(b.make_terminal(b.root(), 1.0), std::logic_error);
}

TEST_CASE("validate accepts the Kuhn tree") {
  const ValidationReport r = validate(build_kuhn());
  CHECK(r.ok());
}

TEST_CASE("validate reports chance probabilities that do not sum to one") {
  GameTreeBuilder b("bad-chance");
  const std::array probs{0.6, 0.6};
  const NodeId c = b.make_chance(b.root(), probs);
  b.make_terminal(c, 1.0);
  b.make_terminal(c + 1, -1.0);
  const ValidationReport r = validate(std::move(b).finish());
  REQUIRE(r.has(Violation::Kind::kChanceProbabilitySum));
  CHECK(r.violations.front().node == 0);
}

TEST_CASE("validate reports negative chance probabilities") {
  GameTreeBuilder b("neg");
  const std::array probs{1.5, -0.5};
  const NodeId c = b.make_chance(b.root(), probs);
  b.make_terminal(c, 1.0);
  b.make_terminal(c + 1, -1.0);
  CHECK(validate(std::move(b).finish()).has(Violation::Kind::kNegativeProbability));
}

TEST_CASE("validate reports action-count mismatches inside an infoset") {
  GameTreeBuilder b("mismatch");
  const std::array probs{0.5, 0.5};
  const NodeId c = b.make_chance(b.root(), probs);
  const NodeId a = b.make_decision(c, PlayerId::kPlayer0, "X", 2);
  const NodeId d = b.make_decision(c + 1, PlayerId::kPlayer0, "X", 3);
  for (int k = 0; k < 2; ++k) b.make_terminal(a + k, 0.0);
  for (int k = 0; k < 3; ++k) b.make_terminal(d + k, 0.0);
  const ValidationReport r = validate(std::move(b).finish());
  REQUIRE(r.has(Violation::Kind::kInfosetActionCountMismatch));
  for (const Violation& v : r.violations) {
    if (v.kind == Violation::Kind::kInfosetActionCountMismatch) {
      CHECK(v.infoset == 0);
      CHECK(v.node == c + 1);
    }
  }
}

TEST_CASE("validate reports infosets shared by two players") {
  GameTreeBuilder b("owners");
  const std::array probs{0.5, 0.5};
  const NodeId c = b.make_chance(b.root(), probs);
  const NodeId a = b.make_decision(c, PlayerId::kPlayer0, "X", 2);
  const NodeId d = b.make_decision(c + 1, PlayerId::kPlayer1, "X", 2);
  for (int k = 0; k < 2; ++k) b.make_terminal(a + k, 0.0);
  for (int k = 0; k < 2; ++k) b.make_terminal(d + k, 0.0);
  CHECK(validate(std::move(b).finish()).has(Violation::Kind::kInfosetPlayerMismatch));
}

TEST_CASE("validate reports payoffs outside the unit range") {
  GameTreeBuilder b("payoff");
  const NodeId a = b.make_decision(b.root(), PlayerId::kPlayer0, "X", 2);
  b.make_terminal(a, 3.0);
  b.make_terminal(a + 1, 0.0);
  CHECK(validate(std::move(b).finish()).has(Violation::Kind::kPayoffOutOfRange));
}

TEST_CASE("validate reports empty decision nodes") {
  GameTreeBuilder b("empty");
  const NodeId a = b.make_decision(b.root(), PlayerId::kPlayer0, "X", 2);
  b.make_decision(a, PlayerId::kPlayer1, "Y", 0);
  b.make_terminal(a + 1, 0.0);
  CHECK(validate(std::move(b).finish()).has(Violation::Kind::kEmptyChildren));
}

TEST_CASE("validate detects imperfect recall") {
  // Player 0 acts, then acts again in one infoset spanning both of its own
  // earlier choices: it has forgotten what it did.
  GameTreeBuilder b("forgetful");
  const NodeId a = b.make_decision(b.root(), PlayerId::kPlayer0, "first", 2);
  const NodeId l = b.make_decision(a, PlayerId::kPlayer0, "second", 2);
  const NodeId r = b.make_decision(a + 1, PlayerId::kPlayer0, "second", 2);
  for (int k = 0; k < 2; ++k) b.make_terminal(l + k, 0.0);
  for (int k = 0; k < 2; ++k) b.make_terminal(r + k, 0.0);
  const ValidationReport report = validate(std::move(b).finish());
  CHECK(report.has(Violation::Kind::kImperfectRecall));
  CHECK_FALSE(report.has(Violation::Kind::kInfosetActionCountMismatch));
}

TEST_CASE("opponent moves do not break perfect recall") {
  GameTreeBuilder b("hidden");
  const NodeId a = b.make_decision(b.root(), PlayerId::kPlayer1, "opp", 2);
  const NodeId l = b.make_decision(a, PlayerId::kPlayer0, "me", 2);
  const NodeId r = b.make_decision(a + 1, PlayerId::kPlayer0, "me", 2);
  for (int k = 0; k < 2; ++k) b.make_terminal(l + k, 0.0);
  for (int k = 0; k < 2; ++k) b.make_terminal(r + k, 0.0);
  CHECK(validate(std::move(b).finish()).ok());
}

TEST_CASE("violation kinds have names") {
  CHECK(to_string(Violation::Kind::kImperfectRecall) == "imperfect-recall");
  CHECK(to_string(Violation::Kind::kChanceProbabilitySum) == "chance-probability-sum");
}

TEST_CASE("tree_stats on the toy tree") {
  const TreeStats s = tree_stats(chance_then_choice());
  CHECK(s.histories == 9);
  CHECK(s.infosets == 2);
  CHECK(s.terminal_histories == 6);
  CHECK(s.depth == 3);
  CHECK(s.max_infoset_size == 1);
}

TEST_CASE("tree_stats is invariant under node reordering") {
  for (const GameTree& t : {build_kuhn(), build_leduc(3), build_goofspiel(4)}) {
    const TreeStats base = tree_stats(t);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const oracle::ShuffledTree sh = oracle::shuffle_tree(t, seed);
      CHECK(tree_stats(sh.tree) == base);
      CHECK(validate(sh.tree).ok());
    }
  }
}

TEST_CASE("reach of a chance edge followed by a player 0 action") {
  const GameTree t = chance_then_choice();
  StrategyProfile p = StrategyProfile::uniform(t);
  const auto reach = reach_probabilities(t, p);
  CHECK(reach[0].total() == 1.0);
  CHECK(reach[0].player0 == 1.0);
  CHECK(reach[0].others(PlayerId::kPlayer0) == 1.0);
  const NodeId after = t.node(1).first_child;  // left branch, first action
  CHECK(reach[static_cast<std::size_t>(after)].total() == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(reach[static_cast<std::size_t>(after)].own(PlayerId::kPlayer0) == 0.25);
  CHECK(reach[static_cast<std::size_t>(after)].others(PlayerId::kPlayer0) == 0.5);
}

TEST_CASE("reach probabilities conserve mass and factor exactly") {
  for (const GameTree& t : {build_kuhn(), build_leduc(3)}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const StrategyProfile p = oracle::random_profile(t, seed, 0.2);
      const auto reach = reach_probabilities(t, p);
      double mass = 0.0;
      for (NodeId id = 0; id < static_cast<NodeId>(t.num_nodes()); ++id) {
        const Reach& r = reach[static_cast<std::size_t>(id)];
        if (t.node(id).is_terminal()) mass += r.total();
        for (PlayerId i : {PlayerId::kPlayer0, PlayerId::kPlayer1}) {
          CHECK(std::abs(r.own(i) * r.others(i) - r.total()) <= 1e-12);
        }
      }
      CHECK(std::abs(mass - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("reach_probabilities names the missing infoset") {
  const GameTree t = build_kuhn();
  StrategyProfile p = StrategyProfile::uniform(t);
  StrategyProfile partial = StrategyProfile::empty(t);
  for (const Infoset& info : t.infosets()) {
    if (info.id != 3) partial.set(info.id, p.at(info.id));
  }
  try {
    reach_probabilities(t, partial);
    FAIL("expected MissingStrategyError");
  } catch (const MissingStrategyError& e) {
    CHECK(e.infoset() == 3);
    CHECK(std::string(e.what()).find(t.infoset(3).key) != std::string::npos);
  }
}

TEST_CASE("strategy profiles validate row lengths") {
  const GameTree t = build_kuhn();
  StrategyProfile p = StrategyProfile::empty(t);
  CHECK_FALSE(p.has(0));
  const std::array<double, 3> wrong{0.2, 0.3, 0.5};
  CHECK_THROWS_AS(p.set(0, wrong), std::invalid_argument);
  CHECK(is_simplex(StrategyProfile::uniform(t).at(0)));
  const std::array<double, 2> neg{1.5, -0.5};
  CHECK_FALSE(is_simplex(neg));
}

TEST_CASE("dump_tree writes one line per node") {
  const GameTree t = chance_then_choice();
  std::ostringstream os;
  dump_tree(t, os);
  const std::string text = os.str();
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == t.num_nodes());
}
