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

#ifndef CFR_FORGE_GAMES_RULES_BUILDER_HPP_
#define CFR_FORGE_GAMES_RULES_BUILDER_HPP_

#include <concepts>
#include <string>
#include <vector>

#include "cfr_forge/game_tree.hpp"

namespace cfr_forge::internal {

// A game state that can be expanded into a GameTree.
template <typename S>
concept GameRules = requires(const S& s, int k) {
  { s.kind() } -> std::same_as<NodeKind>;
  { s.player() } -> std::same_as<PlayerId>;
  { s.num_moves() } -> std::convertible_to<int>;
  { s.probability(k) } -> std::convertible_to<double>;
  { s.child(k) } -> std::same_as<S>;
  { s.infoset_key() } -> std::convertible_to<std::string>;
  { s.move_label(k) } -> std::convertible_to<std::string>;
  { s.raw_payoff0() } -> std::convertible_to<double>;
};

template <GameRules S>
class RulesExpander {
 public:
  explicit RulesExpander(GameTreeBuilder& builder) : builder_(builder) {}

  void expand(const S& state, NodeId id) {
    switch (state.kind()) {
      case NodeKind::kTerminal: {
        builder_.make_terminal(id, state.raw_payoff0());
        return;
      }
      case NodeKind::kChance: {
        const int n = state.num_moves();
        std::vector<double> probs(static_cast<std::size_t>(n));
        std::vector<std::string> labels(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
          probs[static_cast<std::size_t>(k)] = state.probability(k);
          labels[static_cast<std::size_t>(k)] = state.move_label(k);
        }
        const NodeId first = builder_.make_chance(id, probs, labels);
        for (int k = 0; k < n; ++k) expand(state.child(k), first + k);
        return;
      }
      case NodeKind::kDecision: {
        const int n = state.num_moves();
        std::vector<std::string> labels(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = state.move_label(k);
        const NodeId first = builder_.make_decision(id, state.player(), state.infoset_key(), labels);
        for (int k = 0; k < n; ++k) expand(state.child(k), first + k);
        return;
      }
    }
  }

 private:
  GameTreeBuilder& builder_;
};

// Expands `root` depth-first and rescales payoffs into [-1, 1].
template <GameRules S>
GameTree build_from_rules(std::string name, const S& root, std::size_t expected_nodes = 0) {
  GameTreeBuilder builder(std::move(name));
  if (expected_nodes > 0) builder.reserve(expected_nodes);
  RulesExpander<S> expander(builder);
  expander.expand(root, builder.root());
  builder.normalize_payoffs();
  return std::move(builder).finish();
}

}  // namespace cfr_forge::internal

#endif  // CFR_FORGE_GAMES_RULES_BUILDER_HPP_
