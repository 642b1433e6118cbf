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

// Leduc hold'em generalized to `ranks` ranks of two suits each.
//
// Each player antes 1 and receives one private card; a betting round
// follows, then one public card and a second betting round. Raises are 2 in
// the first round and 4 in the second, at most two per round. Folding is only
// legal when facing a raise. Player 0 opens both rounds. At showdown a
// private card pairing the board wins, otherwise the higher rank; equal ranks
// split.

#include <array>
#include <string>

#include "cfr_forge/games.hpp"
#include "games/rules_builder.hpp"

namespace cfr_forge {
namespace {

constexpr int kSuits = 2;
constexpr int kMaxRaises = 2;
constexpr int kAnte = 1;
constexpr std::array<int, 2> kRaiseAmount = {2, 4};

enum Move : int { kFold = 0, kCall = 1, kRaise = 2 };

class LeducState {
 public:
  explicit LeducState(int ranks) : ranks_(ranks) {}

  NodeKind kind() const {
    if (private_[0] < 0 || private_[1] < 0) return NodeKind::kChance;
    if (folded_ >= 0 || showdown_) return NodeKind::kTerminal;
    if (round_ == 1 && public_ < 0 && round_over_) return NodeKind::kChance;
    return NodeKind::kDecision;
  }

  PlayerId player() const { return to_act_ == 0 ? PlayerId::kPlayer0 : PlayerId::kPlayer1; }

  int num_moves() const {
    if (kind() == NodeKind::kChance) return deck_size() - dealt_count();
    return static_cast<int>(legal_moves().size());
  }

  double probability(int) const { return 1.0 / num_moves(); }

  LeducState child(int k) const {
    LeducState next = *this;
    if (kind() == NodeKind::kChance) {
      const int card = undealt_card(k);
      if (private_[0] < 0) {
        next.private_[0] = card;
      } else if (private_[1] < 0) {
        next.private_[1] = card;
      } else {
        next.public_ = card;
        next.round_ = 2;
        next.round_over_ = false;
        next.raises_ = 0;
        next.actions_in_round_ = 0;
        next.to_act_ = 0;
        next.history_.push_back('/');
      }
      return next;
    }
    next.apply(legal_moves()[static_cast<std::size_t>(k)]);
    return next;
  }

  std::string infoset_key() const {
    std::string key = "P" + std::to_string(to_act_) + ":" + std::to_string(private_[to_act_]) + ":";
    key += public_ < 0 ? "-" : std::to_string(public_);
    key += ":";
    key += history_;
    return key;
  }

  std::string move_label(int k) const {
    if (kind() == NodeKind::kChance) return "deal:" + std::to_string(undealt_card(k));
    switch (legal_moves()[static_cast<std::size_t>(k)]) {
      case kFold: return "fold";
      case kCall: return "call";
      default: return "raise";
    }
  }

  double raw_payoff0() const {
    if (folded_ >= 0) {
      return folded_ == 0 ? -static_cast<double>(spent_[0]) : static_cast<double>(spent_[1]);
    }
    const int s0 = strength(private_[0]);
    const int s1 = strength(private_[1]);
    if (s0 == s1) return 0.0;
    return s0 > s1 ? static_cast<double>(spent_[1]) : -static_cast<double>(spent_[0]);
  }

 private:
  struct MoveList {
    std::array<Move, 3> moves{};
    int count = 0;
    std::size_t size() const { return static_cast<std::size_t>(count); }
    Move operator[](std::size_t i) const { return moves[i]; }
  };

  int deck_size() const { return ranks_ * kSuits; }
  int rank_of(int card) const { return card / kSuits; }
  int dealt_count() const {
    return (private_[0] >= 0) + (private_[1] >= 0) + (public_ >= 0);
  }

  int undealt_card(int k) const {
    int seen = 0;
    for (int c = 0; c < deck_size(); ++c) {
      if (c == private_[0] || c == private_[1] || c == public_) continue;
      if (seen++ == k) return c;
    }
    return -1;
  }

  MoveList legal_moves() const {
    MoveList list;
    if (spent_[to_act_] < spent_[1 - to_act_]) list.moves[static_cast<std::size_t>(list.count++)] = kFold;
    list.moves[static_cast<std::size_t>(list.count++)] = kCall;
    if (raises_ < kMaxRaises) list.moves[static_cast<std::size_t>(list.count++)] = kRaise;
    return list;
  }

  void apply(Move m) {
    const int opp = 1 - to_act_;
    switch (m) {
      case kFold:
        history_.push_back('f');
        folded_ = to_act_;
        return;
      case kCall:
        history_.push_back('c');
        spent_[to_act_] = spent_[opp];
        if (actions_in_round_ > 0) {
          if (round_ == 1) {
            round_over_ = true;
          } else {
            showdown_ = true;
          }
          return;
        }
        break;
      case kRaise:
        history_.push_back('r');
        spent_[to_act_] = spent_[opp] + kRaiseAmount[static_cast<std::size_t>(round_ - 1)];
        ++raises_;
        break;
    }
    ++actions_in_round_;
    to_act_ = opp;
  }

  // Pairs rank above every high card.
  int strength(int card) const {
    return rank_of(card) == rank_of(public_) ? ranks_ + rank_of(card) : rank_of(card);
  }

  int ranks_;
  std::array<int, 2> private_ = {-1, -1};
  int public_ = -1;
  int round_ = 1;
  bool round_over_ = false;
  bool showdown_ = false;
  int folded_ = -1;
  int to_act_ = 0;
  int raises_ = 0;
  int actions_in_round_ = 0;
  std::array<int, 2> spent_ = {kAnte, kAnte};
  std::string history_;
};

}  // namespace

GameTree build_leduc(int ranks) {
  if (ranks < 3) {
    throw GameParameterError("leduc: ranks must be >= 3, got " + std::to_string(ranks));
  }
  if (ranks > 26) {
    throw GameParameterError("leduc: ranks must be <= 26, got " + std::to_string(ranks));
  }
  return internal::build_from_rules(GameSpec::leduc(ranks).canonical_name(), LeducState(ranks));
}

}  // namespace cfr_forge
