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

// Two-player Battleship on a rows x cols grid with one 1x2 ship each.
//
// Player 0 then player 1 secretly place their ship. Players then alternate
// shots, player 0 first, each with `shots` shots and never repeating a cell.
// Every shot is announced together with hit or miss. The game ends as soon
// as a ship is sunk or when both players are out of shots. Sinking the
// opponent's ship is worth +1 to the shooter and -1 to the victim; if no ship
// sinks the game is drawn.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cfr_forge/games.hpp"
#include "games/rules_builder.hpp"

namespace cfr_forge {
namespace {

constexpr int kShipLength = 2;

struct Placement {
  int row;
  int col;
  bool horizontal;
  std::uint64_t cells;
};

struct Board {
  int rows;
  int cols;
  int shots;
  std::vector<Placement> placements;  // horizontal first, then vertical

  Board(int r, int c, int s) : rows(r), cols(c), shots(s) {
    for (int row = 0; row < rows; ++row) {
      for (int col = 0; col + kShipLength <= cols; ++col) {
        placements.push_back({row, col, true, bit(row, col) | bit(row, col + 1)});
      }
    }
    for (int row = 0; row + kShipLength <= rows; ++row) {
      for (int col = 0; col < cols; ++col) {
        placements.push_back({row, col, false, bit(row, col) | bit(row + 1, col)});
      }
    }
  }

  int num_cells() const { return rows * cols; }
  std::uint64_t bit(int row, int col) const { return std::uint64_t{1} << (row * cols + col); }
  std::string cell_name(int cell) const {
    return std::to_string(cell / cols) + "," + std::to_string(cell % cols);
  }
};

class BattleshipState {
 public:
  explicit BattleshipState(const Board* board) : board_(board) {}

  NodeKind kind() const { return winner_ >= 0 || out_of_shots() ? NodeKind::kTerminal : NodeKind::kDecision; }

  PlayerId player() const {
    if (placed_ < 2) return placed_ == 0 ? PlayerId::kPlayer0 : PlayerId::kPlayer1;
    return num_shots_ % 2 == 0 ? PlayerId::kPlayer0 : PlayerId::kPlayer1;
  }

  int num_moves() const {
    if (placed_ < 2) return static_cast<int>(board_->placements.size());
    return board_->num_cells() - __builtin_popcountll(fired_[index_of(player())]);
  }

  double probability(int) const { return 0.0; }

  BattleshipState child(int k) const {
    BattleshipState next = *this;
    const int p = index_of(player());
    if (placed_ < 2) {
      next.ship_[p] = k;
      ++next.placed_;
      return next;
    }
    const int cell = nth_open_cell(p, k);
    const std::uint64_t mask = std::uint64_t{1} << cell;
    next.fired_[p] |= mask;
    ++next.num_shots_;
    const std::uint64_t target = board_->placements[static_cast<std::size_t>(ship_[1 - p])].cells;
    const bool hit = (target & mask) != 0;
    next.history_ += board_->cell_name(cell) + (hit ? "h" : "m") + ";";
    if ((next.fired_[p] & target) == target) next.winner_ = p;
    return next;
  }

  std::string infoset_key() const {
    const int p = index_of(player());
    std::string key = "P" + std::to_string(p) + ":";
    key += ship_[p] < 0 ? "-" : std::to_string(ship_[p]);
    return key + ":" + history_;
  }

  std::string move_label(int k) const {
    if (placed_ < 2) {
      const Placement& pl = board_->placements[static_cast<std::size_t>(k)];
      return "place:" + std::to_string(pl.row) + "," + std::to_string(pl.col) + (pl.horizontal ? "h" : "v");
    }
    return "shoot:" + board_->cell_name(nth_open_cell(index_of(player()), k));
  }

  double raw_payoff0() const {
    if (winner_ < 0) return 0.0;
    return winner_ == 0 ? 1.0 : -1.0;
  }

 private:
  bool out_of_shots() const { return placed_ == 2 && num_shots_ == 2 * board_->shots; }

  int nth_open_cell(int p, int k) const {
    for (int c = 0; c < board_->num_cells(); ++c) {
      if ((fired_[p] >> c) & 1u) continue;
      if (k-- == 0) return c;
    }
    return -1;
  }

  const Board* board_;
  std::array<int, 2> ship_ = {-1, -1};
  std::array<std::uint64_t, 2> fired_ = {0, 0};
  int placed_ = 0;
  int num_shots_ = 0;
  int winner_ = -1;
  std::string history_;
};

}  // namespace

GameTree build_battleship(int rows, int cols, int shots) {
  if (rows < 1 || cols < 1 || rows * cols > 36) {
    throw GameParameterError("battleship: grid must have between 1 and 36 cells");
  }
  if (rows < kShipLength && cols < kShipLength) {
    throw GameParameterError("battleship: grid " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " is too small for a ship of length 2");
  }
  if (shots < 1 || shots > rows * cols) {
    throw GameParameterError("battleship: shots must be in [1, rows*cols], got " + std::to_string(shots));
  }
  const Board board(rows, cols, shots);
  return internal::build_from_rules(GameSpec::battleship(rows, cols, shots).canonical_name(),
                                    BattleshipState(&board));
}

}  // namespace cfr_forge
