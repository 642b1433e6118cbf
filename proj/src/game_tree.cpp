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

#include "cfr_forge/game_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cfr_forge {

std::string_view to_string(PlayerId p) {
  switch (p) {
    case PlayerId::kPlayer0: return "player0";
    case PlayerId::kPlayer1: return "player1";
    case PlayerId::kChance: return "chance";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const TreeStats& s) {
  return os << "{histories=" << s.histories << ", infosets=" << s.infosets
            << ", terminal_histories=" << s.terminal_histories << ", depth=" << s.depth
            << ", max_infoset_size=" << s.max_infoset_size << "}";
}

std::string_view GameTree::label(std::int32_t label_id) const {
  if (label_id < 0 || static_cast<std::size_t>(label_id) >= labels_.size()) return {};
  return labels_[static_cast<std::size_t>(label_id)];
}

// ---------------------------------------------------------------------------
// GameTreeBuilder

GameTreeBuilder::GameTreeBuilder(std::string name) {
  tree_.name_ = std::move(name);
  tree_.nodes_.emplace_back();
  defined_.push_back(false);
}

NodeId GameTreeBuilder::allocate_children(NodeId id, std::size_t count) {
  if (id < 0 || static_cast<std::size_t>(id) >= tree_.nodes_.size()) {
    throw std::out_of_range("GameTreeBuilder: unknown node " + std::to_string(id));
  }
  if (defined_[static_cast<std::size_t>(id)]) {
    throw std::logic_error("GameTreeBuilder: node " + std::to_string(id) + " defined twice");
  }
  if (count > std::numeric_limits<std::uint16_t>::max()) {
    throw std::length_error("GameTreeBuilder: too many children");
  }
  defined_[static_cast<std::size_t>(id)] = true;
  const auto first = static_cast<NodeId>(tree_.nodes_.size());
  if (tree_.nodes_.size() + count > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
    throw std::length_error("GameTreeBuilder: node id space exhausted");
  }
  Node& n = tree_.nodes_[static_cast<std::size_t>(id)];
  n.first_child = first;
  n.num_children = static_cast<std::uint16_t>(count);
  for (std::size_t k = 0; k < count; ++k) {
    Node child;
    child.parent = id;
    tree_.nodes_.push_back(child);
    defined_.push_back(false);
  }
  return first;
}

std::int32_t GameTreeBuilder::intern(std::string_view label) {
  auto [it, inserted] =
      label_ids_.try_emplace(std::string(label), static_cast<std::int32_t>(tree_.labels_.size()));
  if (inserted) tree_.labels_.emplace_back(label);
  return it->second;
}

NodeId GameTreeBuilder::make_decision(NodeId id, PlayerId player, std::string_view infoset_key,
                                      std::span<const std::string> action_labels) {
  NodeId first = make_decision(id, player, infoset_key, static_cast<int>(action_labels.size()));
  for (std::size_t k = 0; k < action_labels.size(); ++k) {
    tree_.nodes_[static_cast<std::size_t>(first) + k].label = intern(action_labels[k]);
  }
  return first;
}

NodeId GameTreeBuilder::make_decision(NodeId id, PlayerId player, std::string_view infoset_key,
                                      int num_actions) {
  if (player == PlayerId::kChance) {
    throw std::invalid_argument("GameTreeBuilder: decision node owned by chance");
  }
  if (num_actions < 0) throw std::invalid_argument("GameTreeBuilder: negative action count");
  NodeId first = allocate_children(id, static_cast<std::size_t>(num_actions));

  auto [it, inserted] = infoset_ids_.try_emplace(std::string(infoset_key),
                                                 static_cast<InfosetId>(tree_.infosets_.size()));
  if (inserted) {
    Infoset info;
    info.id = it->second;
    info.player = player;
    info.num_actions = num_actions;
    info.key = std::string(infoset_key);
    tree_.infosets_.push_back(std::move(info));
  }
  Infoset& info = tree_.infosets_[static_cast<std::size_t>(it->second)];
  info.members.push_back(id);

  Node& n = tree_.nodes_[static_cast<std::size_t>(id)];
  n.kind = NodeKind::kDecision;
  n.player = player;
  n.infoset = it->second;
  return first;
}

NodeId GameTreeBuilder::make_chance(NodeId id, std::span<const double> probabilities,
                                    std::span<const std::string> outcome_labels) {
  NodeId first = allocate_children(id, probabilities.size());
  Node& n = tree_.nodes_[static_cast<std::size_t>(id)];
  n.kind = NodeKind::kChance;
  n.player = PlayerId::kChance;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    Node& child = tree_.nodes_[static_cast<std::size_t>(first) + k];
    child.chance_prob = probabilities[k];
    if (k < outcome_labels.size()) child.label = intern(outcome_labels[k]);
  }
  return first;
}

void GameTreeBuilder::make_terminal(NodeId id, double payoff0) {
  allocate_children(id, 0);
  Node& n = tree_.nodes_[static_cast<std::size_t>(id)];
  n.kind = NodeKind::kTerminal;
  n.first_child = kNoNode;
  n.payoff0 = payoff0;
}

void GameTreeBuilder::normalize_payoffs() {
  double max_abs = 0.0;
  for (const Node& n : tree_.nodes_) {
    if (n.is_terminal()) max_abs = std::max(max_abs, std::abs(n.payoff0));
  }
  if (max_abs == 0.0) return;
  for (Node& n : tree_.nodes_) {
    if (n.is_terminal()) n.payoff0 /= max_abs;
  }
  tree_.payoff_scale_ = 1.0 / max_abs;
}

GameTree GameTreeBuilder::finish() && {
  for (std::size_t i = 0; i < defined_.size(); ++i) {
    if (!defined_[i]) {
      throw std::logic_error("GameTreeBuilder: node " + std::to_string(i) + " left undefined");
    }
  }
  GameTree& t = tree_;
  t.nodes_.shrink_to_fit();
  t.offsets_.assign(t.infosets_.size() + 1, 0);
  for (std::size_t i = 0; i < t.infosets_.size(); ++i) {
    const Infoset& info = t.infosets_[i];
    t.offsets_[i + 1] = t.offsets_[i] + static_cast<std::size_t>(std::max(info.num_actions, 0));
    t.player_infosets_[static_cast<std::size_t>(index_of(info.player))].push_back(info.id);
  }
  return std::move(tree_);
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
    case K::kChanceProbabilitySum: return "chance-probability-sum";
    case K::kNegativeProbability: return "negative-probability";
    case K::kEmptyChildren: return "empty-children";
    case K::kBrokenParentLink: return "broken-parent-link";
    case K::kInfosetPlayerMismatch: return "infoset-player-mismatch";
    case K::kInfosetActionCountMismatch: return "infoset-action-count-mismatch";
    case K::kInfosetMemberNotDecision: return "infoset-member-not-decision";
    case K::kDuplicateInfosetMember: return "duplicate-infoset-member";
    case K::kUncoveredDecisionNode: return "uncovered-decision-node";
    case K::kImperfectRecall: return "imperfect-recall";
    case K::kPayoffOutOfRange: return "payoff-out-of-range";
  }
  return "?";
}

bool ValidationReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

void add(ValidationReport& r, Violation::Kind kind, NodeId node, InfosetId infoset,
         std::string message) {
  r.violations.push_back(Violation{kind, node, infoset, std::move(message)});
}

}  // namespace

ValidationReport validate(const GameTree& tree) {
  using K = Violation::Kind;
  ValidationReport report;
  const auto nodes = tree.nodes();
  const auto n_nodes = static_cast<NodeId>(nodes.size());

  std::vector<std::uint8_t> parent_count(nodes.size(), 0);
  for (NodeId id = 0; id < n_nodes; ++id) {
    const Node& n = nodes[static_cast<std::size_t>(id)];
    if (n.is_terminal()) {
      if (n.num_children != 0) add(report, K::kBrokenParentLink, id, kNoInfoset, "terminal with children");
      if (!(n.payoff0 >= -1.0 && n.payoff0 <= 1.0)) {
        add(report, K::kPayoffOutOfRange, id, kNoInfoset,
            "payoff " + std::to_string(n.payoff0) + " outside [-1, 1]");
      }
      continue;
    }
    if (n.num_children == 0) {
      add(report, K::kEmptyChildren, id, kNoInfoset, "non-terminal node without children");
      continue;
    }
    if (n.first_child <= id || n.first_child + n.num_children > n_nodes) {
      add(report, K::kBrokenParentLink, id, kNoInfoset, "child range out of bounds");
      continue;
    }
    double sum = 0.0;
    for (NodeId c = n.first_child; c < n.first_child + n.num_children; ++c) {
      const Node& child = nodes[static_cast<std::size_t>(c)];
      if (child.parent != id) add(report, K::kBrokenParentLink, c, kNoInfoset, "parent mismatch");
      if (parent_count[static_cast<std::size_t>(c)] < 255) ++parent_count[static_cast<std::size_t>(c)];
      if (n.is_chance()) {
        if (child.chance_prob < 0.0) {
          add(report, K::kNegativeProbability, id, kNoInfoset, "negative chance probability");
        }
        sum += child.chance_prob;
      }
    }
    if (n.is_chance() && std::abs(sum - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "chance probabilities sum to " << sum;
      add(report, K::kChanceProbabilitySum, id, kNoInfoset, msg.str());
    }
  }
  for (NodeId id = 0; id < n_nodes; ++id) {
    const std::uint8_t expected = id == tree.root() ? 0 : 1;
    if (parent_count[static_cast<std::size_t>(id)] != expected) {
      add(report, K::kBrokenParentLink, id, kNoInfoset,
          "node has " + std::to_string(parent_count[static_cast<std::size_t>(id)]) + " parents");
    }
  }

  // Infoset partition.
  std::vector<std::uint8_t> covered(nodes.size(), 0);
  for (const Infoset& info : tree.infosets()) {
    if (info.player == PlayerId::kChance) {
      add(report, K::kInfosetPlayerMismatch, kNoNode, info.id, "infoset owned by chance");
    }
    for (NodeId m : info.members) {
      const Node& n = nodes[static_cast<std::size_t>(m)];
      if (covered[static_cast<std::size_t>(m)]++ > 0) {
        add(report, K::kDuplicateInfosetMember, m, info.id, "node listed more than once");
        continue;
      }
      if (!n.is_decision() || n.infoset != info.id) {
        add(report, K::kInfosetMemberNotDecision, m, info.id, "member is not a decision node of this infoset");
        continue;
      }
      if (n.player != info.player) {
        add(report, K::kInfosetPlayerMismatch, m, info.id,
            "member owned by " + std::string(to_string(n.player)) + ", infoset by " +
                std::string(to_string(info.player)));
      }
      if (n.num_children != info.num_actions) {
        add(report, K::kInfosetActionCountMismatch, m, info.id,
            "member has " + std::to_string(n.num_children) + " actions, infoset declares " +
                std::to_string(info.num_actions));
      }
    }
  }
  for (NodeId id = 0; id < n_nodes; ++id) {
    if (nodes[static_cast<std::size_t>(id)].is_decision() && covered[static_cast<std::size_t>(id)] == 0) {
      add(report, K::kUncoveredDecisionNode, id, kNoInfoset, "decision node in no infoset");
    }
  }

  // Perfect recall. Under perfect recall each member of an infoset shares the
  // owner's last (infoset, action) pair; applied to every infoset this implies
  // the full own-sequence matches, by induction on the sequence length.
  if (!report.has(K::kBrokenParentLink) && !report.has(K::kInfosetMemberNotDecision)) {
    constexpr std::int64_t kEmpty = -1;
    std::vector<std::int64_t> last_own[2] = {std::vector<std::int64_t>(nodes.size(), kEmpty),
                                             std::vector<std::int64_t>(nodes.size(), kEmpty)};
    for (NodeId id = 0; id < n_nodes; ++id) {
      const Node& n = nodes[static_cast<std::size_t>(id)];
      if (n.is_terminal()) continue;
      for (int k = 0; k < n.num_children; ++k) {
        const auto c = static_cast<std::size_t>(n.first_child + k);
        last_own[0][c] = last_own[0][static_cast<std::size_t>(id)];
        last_own[1][c] = last_own[1][static_cast<std::size_t>(id)];
        if (n.is_decision() && n.infoset != kNoInfoset) {
          last_own[index_of(n.player)][c] =
              static_cast<std::int64_t>(n.infoset) * 65536 + k;
        }
      }
    }
    for (const Infoset& info : tree.infosets()) {
      if (info.members.empty() || info.player == PlayerId::kChance) continue;
      const auto& seq = last_own[index_of(info.player)];
      const std::int64_t first = seq[static_cast<std::size_t>(info.members.front())];
      for (NodeId m : info.members) {
        if (seq[static_cast<std::size_t>(m)] != first) {
          add(report, K::kImperfectRecall, m, info.id,
              "member's own action history differs from node " + std::to_string(info.members.front()));
          break;
        }
      }
    }
  }
  return report;
}

TreeStats tree_stats(const GameTree& tree) {
  TreeStats s;
  const auto nodes = tree.nodes();
  s.histories = static_cast<std::int64_t>(nodes.size());
  s.infosets = static_cast<std::int64_t>(tree.num_infosets());
  std::vector<std::int32_t> depth(nodes.size(), 1);
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const Node& n = nodes[id];
    if (id > 0) depth[id] = depth[static_cast<std::size_t>(n.parent)] + 1;
    if (n.is_terminal()) {
      ++s.terminal_histories;
      s.depth = std::max<std::int64_t>(s.depth, depth[id]);
    }
  }
  for (const Infoset& info : tree.infosets()) {
    s.max_infoset_size = std::max<std::int64_t>(s.max_infoset_size,
                                                static_cast<std::int64_t>(info.members.size()));
  }
  return s;
}

void dump_tree(const GameTree& tree, std::ostream& os) {
  const auto nodes = tree.nodes();
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const Node& n = nodes[id];
    os << id << ' ';
    switch (n.kind) {
      case NodeKind::kDecision: os << 'D'; break;
      case NodeKind::kChance: os << 'C'; break;
      case NodeKind::kTerminal: os << 'T'; break;
    }
    os << ' ' << n.parent << ' ';
    std::string_view lbl = tree.label(n.label);
    os << (lbl.empty() ? std::string_view("-") : lbl);
    if (n.parent != kNoNode && nodes[static_cast<std::size_t>(n.parent)].is_chance()) {
      os << " p=" << n.chance_prob;
    }
    if (n.is_decision()) {
      os << ' ' << to_string(n.player) << " infoset=" << n.infoset;
    } else if (n.is_terminal()) {
      os << " u0=" << n.payoff0;
    }
    os << '\n';
  }
}

}  // namespace cfr_forge
