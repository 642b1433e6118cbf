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

#include "cfr_forge/strategy.hpp"

#include <algorithm>
#include <cmath>

#include "cfr_forge/reach.hpp"

namespace cfr_forge {

MissingStrategyError::MissingStrategyError(InfosetId infoset, const std::string& key)
    : std::runtime_error("no strategy for infoset " + std::to_string(infoset) + " (" + key + ")"),
      infoset_(infoset) {}

StrategyProfile StrategyProfile::uniform(const GameTree& tree) {
  StrategyProfile p = empty(tree);
  for (const Infoset& info : tree.infosets()) {
    auto row = p.mutable_at(info.id);
    std::fill(row.begin(), row.end(), 1.0 / static_cast<double>(row.size()));
  }
  return p;
}

StrategyProfile StrategyProfile::empty(const GameTree& tree) {
  StrategyProfile p;
  p.tree_ = &tree;
  p.probs_.assign(tree.total_actions(), 0.0);
  p.present_.assign(tree.num_infosets(), false);
  return p;
}

std::span<const double> StrategyProfile::at(InfosetId id) const {
  if (!has(id)) throw MissingStrategyError(id, tree_->infoset(id).key);
  const std::size_t off = tree_->action_offset(id);
  return std::span<const double>(probs_).subspan(off, tree_->action_offset(id + 1) - off);
}

std::span<double> StrategyProfile::mutable_at(InfosetId id) {
  present_[static_cast<std::size_t>(id)] = true;
  const std::size_t off = tree_->action_offset(id);
  return std::span<double>(probs_).subspan(off, tree_->action_offset(id + 1) - off);
}

void StrategyProfile::set(InfosetId id, std::span<const double> probabilities) {
  auto row = mutable_at(id);
  if (probabilities.size() != row.size()) {
    throw std::invalid_argument("StrategyProfile::set: infoset " + std::to_string(id) + " has " +
                                std::to_string(row.size()) + " actions, got " +
                                std::to_string(probabilities.size()));
  }
  std::copy(probabilities.begin(), probabilities.end(), row.begin());
}

bool is_simplex(std::span<const double> v, double tol) {
  double sum = 0.0;
  for (double x : v) {
    if (!(x >= 0.0)) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= tol;
}

std::vector<Reach> reach_probabilities(const GameTree& tree, const StrategyProfile& profile) {
  const auto nodes = tree.nodes();
  std::vector<Reach> reach(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const Node& n = nodes[id];
    if (n.is_terminal()) continue;
    const Reach& here = reach[id];
    std::span<const double> sigma;
    if (n.is_decision()) sigma = profile.at(n.infoset);
    for (int k = 0; k < n.num_children; ++k) {
      const auto c = static_cast<std::size_t>(n.first_child + k);
      Reach& r = reach[c];
      r = here;
      if (n.is_chance()) {
        r.chance *= nodes[c].chance_prob;
      } else if (n.player == PlayerId::kPlayer0) {
        r.player0 *= sigma[static_cast<std::size_t>(k)];
      } else {
        r.player1 *= sigma[static_cast<std::size_t>(k)];
      }
    }
  }
  return reach;
}

}  // namespace cfr_forge
