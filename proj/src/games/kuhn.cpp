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

// Three-card Kuhn poker: ante 1, a single bet of 1, pass/bet actions.

#include <array>
#include <string>

#include "cfr_forge/games.hpp"
#include "games/rules_builder.hpp"

namespace cfr_forge {
namespace {

constexpr int kNumCards = 3;
constexpr std::array<char, kNumCards> kCardNames = {'J', 'Q', 'K'};

class KuhnState {
 public:
  NodeKind kind() const {
    if (cards_[1] < 0) return NodeKind::kChance;
    if (is_terminal_history()) return NodeKind::kTerminal;
    return NodeKind::kDecision;
  }

  PlayerId player() const {
    return history_.size() % 2 == 0 ? PlayerId::kPlayer0 : PlayerId::kPlayer1;
  }

  int num_moves() const {
    if (cards_[0] < 0) return kNumCards;
    if (cards_[1] < 0) return kNumCards - 1;
    return 2;
  }

  double probability(int) const { return 1.0 / num_moves(); }

  KuhnState child(int k) const {
    KuhnState next = *this;
    if (cards_[0] < 0) {
      next.cards_[0] = k;
    } else if (cards_[1] < 0) {
      next.cards_[1] = remaining_card(k);
    } else {
      next.history_.push_back(k == 0 ? 'p' : 'b');
    }
    return next;
  }

  std::string infoset_key() const {
    const int p = index_of(player());
    return "P" + std::to_string(p) + ":" + kCardNames[static_cast<std::size_t>(cards_[p])] + ":" +
           history_;
  }

  std::string move_label(int k) const {
    if (cards_[0] < 0) return std::string("deal0:") + kCardNames[static_cast<std::size_t>(k)];
    if (cards_[1] < 0) {
      return std::string("deal1:") + kCardNames[static_cast<std::size_t>(remaining_card(k))];
    }
    return k == 0 ? "pass" : "bet";
  }

  double raw_payoff0() const {
    const int winner = cards_[0] > cards_[1] ? 0 : 1;
    const double showdown = winner == 0 ? 1.0 : -1.0;
    if (history_ == "pp") return showdown;
    if (history_ == "bb" || history_ == "pbb") return 2.0 * showdown;
    if (history_ == "bp") return 1.0;   // player 1 folds
    return -1.0;                        // "pbp": player 0 folds
  }

 private:
  bool is_terminal_history() const {
    return history_ == "pp" || history_ == "bp" || history_ == "bb" || history_ == "pbp" ||
           history_ == "pbb";
  }

  int remaining_card(int k) const {
    int seen = 0;
    for (int c = 0; c < kNumCards; ++c) {
      if (c == cards_[0]) continue;
      if (seen++ == k) return c;
    }
    return -1;
  }

  std::array<int, 2> cards_ = {-1, -1};
  std::string history_;
};

}  // namespace

GameTree build_kuhn() {
  return internal::build_from_rules("kuhn", KuhnState{});
}

}  // namespace cfr_forge
