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

#ifndef CFR_FORGE_GAMES_HPP_
#define CFR_FORGE_GAMES_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfr_forge/game_tree.hpp"

namespace cfr_forge {

// Raised for out-of-range game parameters and malformed game strings.
class GameParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GameFamily { kKuhn, kLeduc, kGoofspiel, kLiarsDice, kBattleship };

struct GameSpec {
  GameFamily family = GameFamily::kKuhn;
  int ranks = 3;          // leduc
  int cards = 4;          // goofspiel
  int sides = 4;          // liar's dice
  bool wild_high = false; // liar's dice: highest face counts as every face
  int rows = 3;           // battleship
  int cols = 2;
  int shots = 3;

  static GameSpec kuhn();
  static GameSpec leduc(int ranks = 3);
  static GameSpec goofspiel(int cards);
  static GameSpec liars_dice(int sides, bool wild_high = false);
  static GameSpec battleship(int rows, int cols, int shots);

  // "kuhn", "leduc_3", "goofspiel_4", "liars_dice_5", "battleship_3_2_3".
  std::string canonical_name() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

// Accepts `kuhn`, `leduc`, `leduc:5`, `goofspiel:4`, `liars_dice:5`,
// `liars_dice:5:wild`, `battleship:3x2:3` and the canonical names.
GameSpec parse_game_spec(std::string_view text);

GameTree build_kuhn();
// Leduc hold'em over `ranks` ranks and two suits.
GameTree build_leduc(int ranks = 3);
GameTree build_goofspiel(int cards);
GameTree build_liars_dice(int sides, bool wild_high = false);
GameTree build_battleship(int rows, int cols, int shots);

GameTree build_game(const GameSpec& spec);

// Published size statistics for the benchmark configurations, if any.
std::optional<TreeStats> reference_stats(const GameSpec& spec);
// Every configuration that has reference statistics.
std::vector<GameSpec> reference_games();

}  // namespace cfr_forge

#endif  // CFR_FORGE_GAMES_HPP_
