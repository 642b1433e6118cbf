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


#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "cfr_forge/game_tree.hpp"
#include "cfr_forge/games.hpp"
#include "doctest.h"

using namespace cfr_forge;

namespace {

void check_sizes(const GameSpec& spec) {
  CAPTURE(spec.canonical_name());
  const GameTree t = build_game(spec);
  const auto expected = reference_stats(spec);
  REQUIRE(expected.has_value());
  CHECK(tree_stats(t) == *expected);
  CHECK(validate(t).ok());
}

std::string fingerprint(const GameTree& t) {
  std::string out;
  for (const Node& n : t.nodes()) {
    out += std::to_string(static_cast<int>(n.kind)) + ":" + std::to_string(n.num_children) + ":" +
           std::to_string(n.infoset) + ":" + std::to_string(n.payoff0) + ";";
  }
  return out;
}

}  // namespace

TEST_CASE("Kuhn sizes and structure") {
  check_sizes(GameSpec::kuhn());
  const GameTree t = build_kuhn();
  for (const Infoset& info : t.infosets()) CHECK(info.num_actions == 2);
  CHECK(t.payoff_scale() == 0.5);
}

TEST_CASE("Leduc sizes") {
  check_sizes(GameSpec::leduc(3));
  check_sizes(GameSpec::leduc(5));
  CHECK(build_leduc(3).payoff_scale() == doctest::Approx(1.0 / 13.0));
}

TEST_CASE("Goofspiel sizes") {
  check_sizes(GameSpec::goofspiel(4));
  check_sizes(GameSpec::goofspiel(5));
}

TEST_CASE("Liar's Dice sizes") {
  check_sizes(GameSpec::liars_dice(4));
  check_sizes(GameSpec::liars_dice(5));
}

TEST_CASE("small Battleship grids are valid") {
  const GameTree t = build_battleship(2, 2, 2);
  CHECK(validate(t).ok());
  CHECK(t.num_infosets() > 0);
}

TEST_CASE("payoffs are normalized into the unit range") {
  for (const GameTree& t :
       {build_kuhn(), build_leduc(3), build_goofspiel(4), build_liars_dice(3), build_battleship(2, 2, 2)}) {
    double max_abs = 0.0;
    for (const Node& n : t.nodes()) {
      if (!n.is_terminal()) continue;
      CHECK(n.payoff0 >= -1.0);
      CHECK(n.payoff0 <= 1.0);
      max_abs = std::max(max_abs, std::abs(n.payoff0));
    }
    CHECK(max_abs == 1.0);
  }
}

TEST_CASE("generators are deterministic") {
  CHECK(fingerprint(build_leduc(3)) == fingerprint(build_leduc(3)));
  CHECK(fingerprint(build_goofspiel(4)) == fingerprint(build_goofspiel(4)));
  CHECK(fingerprint(build_liars_dice(4)) == fingerprint(build_liars_dice(4)));
}

TEST_CASE("out-of-range parameters are rejected") {
  CHECK_THROWS_AS(build_leduc(2), GameParameterError);
  CHECK_THROWS_AS(build_goofspiel(2), GameParameterError);
  CHECK_THROWS_AS(build_goofspiel(6), GameParameterError);
  CHECK_THROWS_AS(build_liars_dice(1), GameParameterError);
  CHECK_THROWS_AS(build_liars_dice(7), GameParameterError);
  CHECK_THROWS_AS(build_battleship(1, 1, 1), GameParameterError);
  CHECK_THROWS_AS(build_battleship(3, 2, 0), GameParameterError);
}

TEST_CASE("game specs parse from CLI strings") {
  CHECK(parse_game_spec("kuhn") == GameSpec::kuhn());
  CHECK(parse_game_spec("leduc") == GameSpec::leduc(3));
  CHECK(parse_game_spec("leduc:5") == GameSpec::leduc(5));
  CHECK(parse_game_spec("leduc_9") == GameSpec::leduc(9));
  CHECK(parse_game_spec("goofspiel:4") == GameSpec::goofspiel(4));
  CHECK(parse_game_spec("liars_dice:5") == GameSpec::liars_dice(5));
  CHECK(parse_game_spec("liars_dice:5:wild") == GameSpec::liars_dice(5, true));
  CHECK(parse_game_spec("battleship:3x2:3") == GameSpec::battleship(3, 2, 3));
  CHECK(parse_game_spec("battleship_4_3_2") == GameSpec::battleship(4, 3, 2));
  CHECK_THROWS_AS(parse_game_spec("chess"), GameParameterError);
  CHECK_THROWS_AS(parse_game_spec("leduc:x"), GameParameterError);
  CHECK_THROWS_AS(parse_game_spec("leduc:2"), GameParameterError);
}

TEST_CASE("canonical names round-trip") {
  CHECK(GameSpec::leduc(9).canonical_name() == "leduc_9");
  CHECK(GameSpec::battleship(3, 2, 3).canonical_name() == "battleship_3_2_3");
  CHECK(GameSpec::kuhn().canonical_name() == "kuhn");
  for (const GameSpec& spec : reference_games()) {
    CHECK(parse_game_spec(spec.canonical_name()) == spec);
  }
}

TEST_CASE("reference table covers the eleven benchmark configurations") {
  const auto games = reference_games();
  CHECK(games.size() == 11);
  std::set<std::string> names;
  for (const GameSpec& g : games) names.insert(g.canonical_name());
  CHECK(names.size() == 11);
  CHECK_FALSE(reference_stats(GameSpec::leduc(4)).has_value());
}

TEST_CASE("wild Liar's Dice builds a different but valid game") {
  const GameTree plain = build_liars_dice(3);
  const GameTree wild = build_liars_dice(3, true);
  CHECK(validate(wild).ok());
  CHECK(tree_stats(plain).histories == tree_stats(wild).histories);
  CHECK(fingerprint(plain) != fingerprint(wild));
}
