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

#ifndef CFR_FORGE_EXPLOITABILITY_HPP_
#define CFR_FORGE_EXPLOITABILITY_HPP_

#include "cfr_forge/game_tree.hpp"
#include "cfr_forge/strategy.hpp"

namespace cfr_forge {

struct BestResponseValue {
  PlayerId player = PlayerId::kPlayer0;
  double value = 0.0;  // max over sigma'_i of u_i(sigma'_i, sigma_{-i})
};

// Exact best response of `player` against the opponent's part of
// `profile`. The responder's own entries are ignored and may be missing.
// Ties pick the lowest action index. Throws MissingStrategyError when an
// opponent infoset has no strategy.
BestResponseValue best_response_value(const GameTree& tree, const StrategyProfile& profile,
                                      PlayerId player);

// u_player(sigma) for a complete profile.
double expected_utility(const GameTree& tree, const StrategyProfile& profile, PlayerId player);

// (BR_0 + BR_1) / 2 in normalized payoff units. Values in [-1e-10, 0) are
// reported as 0.
double exploitability(const GameTree& tree, const StrategyProfile& profile);

}  // namespace cfr_forge

#endif  // CFR_FORGE_EXPLOITABILITY_HPP_
