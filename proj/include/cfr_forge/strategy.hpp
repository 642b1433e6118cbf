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

#ifndef CFR_FORGE_STRATEGY_HPP_
#define CFR_FORGE_STRATEGY_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfr_forge/game_tree.hpp"

namespace cfr_forge {

class MissingStrategyError : public std::runtime_error {
 public:
  MissingStrategyError(InfosetId infoset, const std::string& key);
  InfosetId infoset() const { return infoset_; }

 private:
  InfosetId infoset_;
};

// Behavioral strategies for both players, one simplex vector per infoset,
// stored in the tree's flat (infoset, action) layout.
class StrategyProfile {
 public:
  StrategyProfile() = default;

  // Every infoset starts at the uniform distribution.
  static StrategyProfile uniform(const GameTree& tree);
  // No infoset has a strategy until `set` is called.
  static StrategyProfile empty(const GameTree& tree);

  bool has(InfosetId id) const { return present_[static_cast<std::size_t>(id)]; }
  // Throws MissingStrategyError for unset infosets.
  std::span<const double> at(InfosetId id) const;
  std::span<double> mutable_at(InfosetId id);
  void set(InfosetId id, std::span<const double> probabilities);

  std::size_t num_infosets() const { return present_.size(); }
  std::span<const double> flat() const { return probs_; }

 private:
  const GameTree* tree_ = nullptr;
  std::vector<double> probs_;
  std::vector<bool> present_;
};

// True when every entry is >= 0 and the sum is within `tol` of one.
bool is_simplex(std::span<const double> v, double tol = 1e-12);

}  // namespace cfr_forge

#endif  // CFR_FORGE_STRATEGY_HPP_
