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

// One-die-each Liar's Dice.
//
// Bids are (quantity, face) pairs with quantity in {1, 2}, totally ordered as
// 1-1 < 1-2 < ... < 1-s < 2-1 < ... < 2-s. Player 0 opens with any bid; each
// later turn either raises the bid or calls "liar" on the previous one. After
// the highest bid only the call remains. A call is resolved by counting
// matching faces across both dice; the bid stands if the count reaches the
// quantity. Optionally the highest face is wild.

#include <array>
#include <string>

#include "cfr_forge/games.hpp"
#include "games/rules_builder.hpp"

namespace cfr_forge {
namespace {

constexpr int kTotalDice = 2;

class LiarsDiceState {
 public:
  LiarsDiceState(int sides, bool wild_high) : sides_(sides), wild_high_(wild_high) {}

  NodeKind kind() const {
    if (dice_[0] < 0 || dice_[1] < 0) return NodeKind::kChance;
    return called_ ? NodeKind::kTerminal : NodeKind::kDecision;
  }

  PlayerId player() const { return num_bids_ % 2 == 0 ? PlayerId::kPlayer0 : PlayerId::kPlayer1; }

  int num_moves() const {
    if (kind() == NodeKind::kChance) return sides_;
    const int raises = num_bid_kinds() - (last_bid_ + 1);
    return raises + (last_bid_ >= 0 ? 1 : 0);
  }

  double probability(int) const { return 1.0 / sides_; }

  LiarsDiceState child(int k) const {
    LiarsDiceState next = *this;
    if (dice_[0] < 0) {
      next.dice_[0] = k + 1;
    } else if (dice_[1] < 0) {
      next.dice_[1] = k + 1;
    } else if (is_call(k)) {
      next.called_ = true;
      next.history_ += "L";
    } else {
      next.last_bid_ = last_bid_ + 1 + k;
      ++next.num_bids_;
      next.history_ += bid_name(next.last_bid_) + ",";
    }
    return next;
  }

  std::string infoset_key() const {
    const int p = index_of(player());
    return "P" + std::to_string(p) + ":" + std::to_string(dice_[p]) + ":" + history_;
  }

  std::string move_label(int k) const {
    if (kind() == NodeKind::kChance) return "roll:" + std::to_string(k + 1);
    return is_call(k) ? "liar" : "bid:" + bid_name(last_bid_ + 1 + k);
  }

  double raw_payoff0() const {
    const int quantity = last_bid_ / sides_ + 1;
    const int face = last_bid_ % sides_ + 1;
    int count = 0;
    for (int d : dice_) {
      if (d == face || (wild_high_ && d == sides_)) ++count;
    }
    const int bidder = (num_bids_ - 1) % 2;
    const int winner = count >= quantity ? bidder : 1 - bidder;
    return winner == 0 ? 1.0 : -1.0;
  }

 private:
  int num_bid_kinds() const { return kTotalDice * sides_; }
  bool is_call(int k) const { return last_bid_ + 1 + k >= num_bid_kinds(); }
  std::string bid_name(int bid) const {
    return std::to_string(bid / sides_ + 1) + "-" + std::to_string(bid % sides_ + 1);
  }

  int sides_;
  bool wild_high_;
  std::array<int, 2> dice_ = {-1, -1};
  int last_bid_ = -1;
  int num_bids_ = 0;
  bool called_ = false;
  std::string history_;
};

}  // namespace

GameTree build_liars_dice(int sides, bool wild_high) {
  if (sides < 2 || sides > 6) {
    throw GameParameterError("liars_dice: sides must be in [2, 6], got " + std::to_string(sides));
  }
  return internal::build_from_rules(GameSpec::liars_dice(sides, wild_high).canonical_name(),
                                    LiarsDiceState(sides, wild_high));
}

}  // namespace cfr_forge
