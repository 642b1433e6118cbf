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

#ifndef CFR_FORGE_COUNTERFACTUAL_HPP_
#define CFR_FORGE_COUNTERFACTUAL_HPP_

#include <span>
#include <vector>

#include "cfr_forge/game_tree.hpp"
#include "cfr_forge/strategy.hpp"

namespace cfr_forge {

// Computes v(I, a) = sum_{h in I} pi_{-i}(h) * u_i(ha | sigma) for every
// infoset of one player with a forward reach sweep and a backward value
// sweep. Buffers are reused across calls.
class CounterfactualEvaluator {
 public:
  explicit CounterfactualEvaluator(const GameTree& tree);

  // Returns u_player(sigma). Throws MissingStrategyError if any infoset
  // lacks a strategy.
  double evaluate(const StrategyProfile& profile, PlayerId player);

  // Values for infosets of the last evaluated player; zero elsewhere.
  std::span<const double> values(InfosetId id) const;
  std::span<const double> all_values() const { return values_; }
  // pi_i(I) of the last evaluated player.
  double own_reach(InfosetId id) const { return own_reach_[static_cast<std::size_t>(id)]; }
  std::span<const double> all_own_reach() const { return own_reach_; }

 private:
  const GameTree* tree_;
  std::vector<double> others_;
  std::vector<double> own_;
  std::vector<double> node_value_;
  std::vector<double> values_;
  std::vector<double> own_reach_;
};

struct CounterfactualValues {
  std::vector<double> values;     // flat (infoset, action) layout
  std::vector<double> own_reach;  // per infoset
  double expected_utility = 0.0;

  std::span<const double> at(const GameTree& tree, InfosetId id) const;
};

CounterfactualValues counterfactual_values(const GameTree& tree, const StrategyProfile& profile,
                                           PlayerId player);

// r = v - <v, sigma> 1. Throws std::invalid_argument on a length mismatch.
std::vector<double> instantaneous_regret(std::span<const double> values,
                                         std::span<const double> sigma);
void instantaneous_regret(std::span<const double> values, std::span<const double> sigma,
                          std::span<double> out);

}  // namespace cfr_forge

#endif  // CFR_FORGE_COUNTERFACTUAL_HPP_
