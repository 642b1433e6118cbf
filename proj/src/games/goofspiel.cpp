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

// Imperfect-information Goofspiel.
//
// Both players hold cards 1..n. Prizes are revealed in descending order
// n, n-1, ..., 1. Each turn the players bid one card simultaneously; the
// simultaneous move is serialized as player 0 then player 1, and player 1
// does not see player 0's bid. The higher bid takes the prize; on a tie the
// prize is discarded. Players only learn who won each turn, never the
// opponent's cards. The final turn is forced and resolved automatically.
// Payoff is +1 / -1 / 0 by comparing total prize points.

#include <array>
#include <string>

#include "cfr_forge/games.hpp"
#include "games/rules_builder.hpp"

namespace cfr_forge {
namespace {

class GoofspielState {
 public:
  explicit GoofspielState(int cards) : cards_(cards) {
    hand_[0] = hand_[1] = (1u << cards) - 1u;
  }

  NodeKind kind() const { return finished_ ? NodeKind::kTerminal : NodeKind::kDecision; }

  PlayerId player() const { return pending_bid_ < 0 ? PlayerId::kPlayer0 : PlayerId::kPlayer1; }

  int num_moves() const { return __builtin_popcount(hand_[index_of(player())]); }

  double probability(int) const { return 0.0; }

  GoofspielState child(int k) const {
    GoofspielState next = *this;
    const int p = index_of(player());
    const int card = nth_card(hand_[p], k);
    next.hand_[p] &= ~(1u << card);
    next.own_bids_[p].push_back(static_cast<char>('1' + card));
    if (p == 0) {
      next.pending_bid_ = card;
      return next;
    }
    next.resolve_turn(pending_bid_, card);
    next.pending_bid_ = -1;
    if (next.turn_ == cards_ - 1) {
      // One card left each: play it out.
      next.resolve_turn(__builtin_ctz(next.hand_[0]), __builtin_ctz(next.hand_[1]));
      next.finished_ = true;
    }
    return next;
  }

  std::string infoset_key() const {
    const int p = index_of(player());
    return "P" + std::to_string(p) + ":" + own_bids_[p] + ":" + outcomes_;
  }

  std::string move_label(int k) const {
    return "bid:" + std::to_string(nth_card(hand_[index_of(player())], k) + 1);
  }

  double raw_payoff0() const {
    if (points_[0] == points_[1]) return 0.0;
    return points_[0] > points_[1] ? 1.0 : -1.0;
  }

 private:
  static int nth_card(unsigned hand, int k) {
    for (int c = 0; hand != 0; ++c, hand >>= 1) {
      if ((hand & 1u) && k-- == 0) return c;
    }
    return -1;
  }

  // Card indices are zero-based; card c is worth c + 1.
  void resolve_turn(int bid0, int bid1) {
    const int prize = cards_ - turn_;
    if (bid0 > bid1) {
      points_[0] += prize;
      outcomes_.push_back('0');
    } else if (bid1 > bid0) {
      points_[1] += prize;
      outcomes_.push_back('1');
    } else {
      outcomes_.push_back('=');
    }
    ++turn_;
  }

  int cards_;
  std::array<unsigned, 2> hand_{};
  std::array<std::string, 2> own_bids_;
  std::string outcomes_;
  std::array<int, 2> points_ = {0, 0};
  int turn_ = 0;
  int pending_bid_ = -1;
  bool finished_ = false;
};

}  // namespace

GameTree build_goofspiel(int cards) {
  if (cards < 3 || cards > 5) {
    throw GameParameterError("goofspiel: cards must be in [3, 5], got " + std::to_string(cards));
  }
  return internal::build_from_rules(GameSpec::goofspiel(cards).canonical_name(),
                                    GoofspielState(cards));
}

}  // namespace cfr_forge
