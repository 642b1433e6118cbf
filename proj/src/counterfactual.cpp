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

#include "cfr_forge/counterfactual.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cfr_forge {

CounterfactualEvaluator::CounterfactualEvaluator(const GameTree& tree)
    : tree_(&tree),
      others_(tree.num_nodes()),
      own_(tree.num_nodes()),
      node_value_(tree.num_nodes()),
      values_(tree.total_actions()),
      own_reach_(tree.num_infosets()) {}

std::span<const double> CounterfactualEvaluator::values(InfosetId id) const {
  const std::size_t off = tree_->action_offset(id);
  return std::span<const double>(values_).subspan(off, tree_->action_offset(id + 1) - off);
}

double CounterfactualEvaluator::evaluate(const StrategyProfile& profile, PlayerId player) {
  const GameTree& tree = *tree_;
  for (const Infoset& info : tree.infosets()) {
    if (!profile.has(info.id)) throw MissingStrategyError(info.id, info.key);
  }
  const auto nodes = tree.nodes();
  const std::span<const double> sigma = profile.flat();
  const std::size_t num_nodes = nodes.size();

  // Parents precede children, so one forward sweep settles all reaches.
  others_[0] = 1.0;
  own_[0] = 1.0;
  for (std::size_t id = 0; id < num_nodes; ++id) {
    const Node& n = nodes[id];
    if (n.is_terminal()) continue;
    const auto first = static_cast<std::size_t>(n.first_child);
    const double others = others_[id];
    const double own = own_[id];
    if (n.is_chance()) {
      for (std::size_t k = 0; k < n.num_children; ++k) {
        others_[first + k] = others * nodes[first + k].chance_prob;
        own_[first + k] = own;
      }
    } else {
      const double* s = sigma.data() + tree.action_offset(n.infoset);
      if (n.player == player) {
        for (std::size_t k = 0; k < n.num_children; ++k) {
          others_[first + k] = others;
          own_[first + k] = own * s[k];
        }
      } else {
        for (std::size_t k = 0; k < n.num_children; ++k) {
          others_[first + k] = others * s[k];
          own_[first + k] = own;
        }
      }
    }
  }

  std::fill(values_.begin(), values_.end(), 0.0);
  for (std::size_t id = num_nodes; id-- > 0;) {
    const Node& n = nodes[id];
    if (n.is_terminal()) {
      node_value_[id] = player == PlayerId::kPlayer0 ? n.payoff0 : -n.payoff0;
      continue;
    }
    const auto first = static_cast<std::size_t>(n.first_child);
    double v = 0.0;
    if (n.is_chance()) {
      for (std::size_t k = 0; k < n.num_children; ++k) {
        v += nodes[first + k].chance_prob * node_value_[first + k];
      }
    } else {
      const std::size_t off = tree.action_offset(n.infoset);
      const double* s = sigma.data() + off;
      for (std::size_t k = 0; k < n.num_children; ++k) v += s[k] * node_value_[first + k];
      if (n.player == player) {
        double* out = values_.data() + off;
        const double others = others_[id];
        for (std::size_t k = 0; k < n.num_children; ++k) out[k] += others * node_value_[first + k];
      }
    }
    node_value_[id] = v;
  }

  for (const Infoset& info : tree.infosets()) {
    own_reach_[static_cast<std::size_t>(info.id)] =
        info.player == player && !info.members.empty()
            ? own_[static_cast<std::size_t>(info.members.front())]
            : 0.0;
  }
  return node_value_[0];
}

std::span<const double> CounterfactualValues::at(const GameTree& tree, InfosetId id) const {
  const std::size_t off = tree.action_offset(id);
  return std::span<const double>(values).subspan(off, tree.action_offset(id + 1) - off);
}

CounterfactualValues counterfactual_values(const GameTree& tree, const StrategyProfile& profile,
                                           PlayerId player) {
  CounterfactualEvaluator eval(tree);
  CounterfactualValues out;
  out.expected_utility = eval.evaluate(profile, player);
  out.values.assign(eval.all_values().begin(), eval.all_values().end());
  out.own_reach.assign(eval.all_own_reach().begin(), eval.all_own_reach().end());
  return out;
}

void instantaneous_regret(std::span<const double> values, std::span<const double> sigma,
                          std::span<double> out) {
  if (values.size() != sigma.size() || out.size() != values.size()) {
    throw std::invalid_argument("instantaneous_regret: length mismatch (" +
                                std::to_string(values.size()) + " values, " +
                                std::to_string(sigma.size()) + " probabilities)");
  }
  double expected = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a) expected += values[a] * sigma[a];
  for (std::size_t a = 0; a < values.size(); ++a) out[a] = values[a] - expected;
}

std::vector<double> instantaneous_regret(std::span<const double> values,
                                         std::span<const double> sigma) {
  std::vector<double> out(values.size());
  instantaneous_regret(values, sigma, out);
  return out;
}

}  // namespace cfr_forge
