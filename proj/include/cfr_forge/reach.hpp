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

#ifndef CFR_FORGE_REACH_HPP_
#define CFR_FORGE_REACH_HPP_

#include <vector>

#include "cfr_forge/game_tree.hpp"
#include "cfr_forge/strategy.hpp"

namespace cfr_forge {

// Per-node reach decomposed by contributor.
struct Reach {
  double player0 = 1.0;
  double player1 = 1.0;
  double chance = 1.0;

  double total() const { return player0 * player1 * chance; }
  double own(PlayerId p) const { return p == PlayerId::kPlayer0 ? player0 : player1; }
  // Contribution of the opponent and chance.
  double others(PlayerId p) const {
    return (p == PlayerId::kPlayer0 ? player1 : player0) * chance;
  }
};

// Indexed by NodeId. Throws MissingStrategyError when any decision
// node's infoset has no strategy in `profile`.
std::vector<Reach> reach_probabilities(const GameTree& tree, const StrategyProfile& profile);

}  // namespace cfr_forge

#endif  // CFR_FORGE_REACH_HPP_
