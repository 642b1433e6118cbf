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

#include "cfr_forge/exploitability.hpp"

#include <vector>

#include "cfr_forge/counterfactual.hpp"

namespace cfr_forge {
namespace {

class BestResponder {
 public:
  BestResponder(const GameTree& tree, const StrategyProfile& profile, PlayerId responder)
      : tree_(tree),
        profile_(profile),
        responder_(responder),
        others_(tree.num_nodes(), 0.0),
        value_(tree.num_nodes(), 0.0),
        done_(tree.num_nodes(), false),
        choice_(tree.num_infosets(), -1) {}

  double solve() {
    forward_reach();
    return value(tree_.root());
  }

 private:
  // Opponent-and-chance reach; the responder's choices do not enter.
  void forward_reach() {
    const auto nodes = tree_.nodes();
    others_[0] = 1.0;
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      const Node& n = nodes[id];
      if (n.is_terminal()) continue;
      const auto first = static_cast<std::size_t>(n.first_child);
      if (n.is_chance()) {
        for (std::size_t k = 0; k < n.num_children; ++k) {
          others_[first + k] = others_[id] * nodes[first + k].chance_prob;
        }
      } else if (n.player == responder_) {
        for (std::size_t k = 0; k < n.num_children; ++k) others_[first + k] = others_[id];
      } else {
        const auto sigma = profile_.at(n.infoset);
        for (std::size_t k = 0; k < n.num_children; ++k) others_[first + k] = others_[id] * sigma[k];
      }
    }
  }

  double value(NodeId id) {
    const auto i = static_cast<std::size_t>(id);
    if (done_[i]) return value_[i];
    const Node& n = tree_.node(id);
    double v = 0.0;
    switch (n.kind) {
      case NodeKind::kTerminal:
        v = tree_.utility(id, responder_);
        break;
      case NodeKind::kChance:
        for (int k = 0; k < n.num_children; ++k) {
          v += tree_.node(n.first_child + k).chance_prob * value(n.first_child + k);
        }
        break;
      case NodeKind::kDecision:
        if (n.player == responder_) {
          v = value(n.first_child + decide(n.infoset));
        } else {
          const auto sigma = profile_.at(n.infoset);
          for (int k = 0; k < n.num_children; ++k) {
            v += sigma[static_cast<std::size_t>(k)] * value(n.first_child + k);
          }
        }
        break;
    }
    value_[i] = v;
    done_[i] = true;
    return v;
  }

  // Action maximizing the reach-weighted value summed over all members.
  int decide(InfosetId infoset) {
    int& choice = choice_[static_cast<std::size_t>(infoset)];
    if (choice >= 0) return choice;
    const Infoset& info = tree_.infoset(infoset);
    std::vector<double> totals(static_cast<std::size_t>(info.num_actions), 0.0);
    for (NodeId h : info.members) {
      const double w = others_[static_cast<std::size_t>(h)];
      const Node& n = tree_.node(h);
      for (int k = 0; k < n.num_children; ++k) {
        totals[static_cast<std::size_t>(k)] += w * value(n.first_child + k);
      }
    }
    int best = 0;
    for (int k = 1; k < info.num_actions; ++k) {
      if (totals[static_cast<std::size_t>(k)] > totals[static_cast<std::size_t>(best)]) best = k;
    }
    choice = best;
    return best;
  }

  const GameTree& tree_;
  const StrategyProfile& profile_;
  PlayerId responder_;
  std::vector<double> others_;
  std::vector<double> value_;
  std::vector<bool> done_;
  std::vector<int> choice_;
};

}  // namespace

BestResponseValue best_response_value(const GameTree& tree, const StrategyProfile& profile,
                                      PlayerId player) {
  BestResponder responder(tree, profile, player);
  return {player, responder.solve()};
}

double expected_utility(const GameTree& tree, const StrategyProfile& profile, PlayerId player) {
  CounterfactualEvaluator eval(tree);
  return eval.evaluate(profile, player);
}

double exploitability(const GameTree& tree, const StrategyProfile& profile) {
  const double br0 = best_response_value(tree, profile, PlayerId::kPlayer0).value;
  const double br1 = best_response_value(tree, profile, PlayerId::kPlayer1).value;
  const double eps = (br0 + br1) / 2.0;
  return eps < 0.0 && eps >= -1e-10 ? 0.0 : eps;
}

}  // namespace cfr_forge
