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

#ifndef CFR_FORGE_GAME_TREE_HPP_
#define CFR_FORGE_GAME_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cfr_forge {

enum class PlayerId : std::int8_t { kPlayer0 = 0, kPlayer1 = 1, kChance = 2 };

inline constexpr int index_of(PlayerId p) { return static_cast<int>(p); }
inline constexpr PlayerId opponent_of(PlayerId p) {
  return p == PlayerId::kPlayer0 ? PlayerId::kPlayer1 : PlayerId::kPlayer0;
}
std::string_view to_string(PlayerId p);

using NodeId = std::int32_t;
using InfosetId = std::int32_t;
inline constexpr NodeId kNoNode = -1;
inline constexpr InfosetId kNoInfoset = -1;

enum class NodeKind : std::uint8_t { kDecision, kChance, kTerminal };

// One history of the game. Children of a node occupy the contiguous id range
// [first_child, first_child + num_children) and always have larger ids than
// their parent, so a forward sweep over ids is a top-down traversal.
struct Node {
  NodeKind kind = NodeKind::kTerminal;
  PlayerId player = PlayerId::kChance;  // owner of a decision node
  std::uint16_t num_children = 0;
  NodeId parent = kNoNode;
  NodeId first_child = kNoNode;
  InfosetId infoset = kNoInfoset;
  std::int32_t label = -1;   // interned label of the incoming edge
  double payoff0 = 0.0;      // terminal: utility of player 0
  double chance_prob = 1.0;  // probability of the incoming edge when the parent is a chance node

  bool is_terminal() const { return kind == NodeKind::kTerminal; }
  bool is_chance() const { return kind == NodeKind::kChance; }
  bool is_decision() const { return kind == NodeKind::kDecision; }
};

struct Infoset {
  InfosetId id = kNoInfoset;
  PlayerId player = PlayerId::kPlayer0;
  int num_actions = 0;
  std::string key;
  std::vector<NodeId> members;
};

// Counts reported for a game. `depth` is the number of histories on the
// longest root-to-leaf path (i.e. the longest action sequence plus one).
struct TreeStats {
  std::int64_t histories = 0;
  std::int64_t infosets = 0;
  std::int64_t terminal_histories = 0;
  std::int64_t depth = 0;
  std::int64_t max_infoset_size = 0;

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};
std::ostream& operator<<(std::ostream& os, const TreeStats& s);

class GameTreeBuilder;

// Immutable perfect-recall extensive-form game.
class GameTree {
 public:
  const std::string& name() const { return name_; }
  NodeId root() const { return 0; }
  std::size_t num_nodes() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::span<const Node> nodes() const { return nodes_; }

  std::size_t num_infosets() const { return infosets_.size(); }
  const Infoset& infoset(InfosetId id) const { return infosets_[static_cast<std::size_t>(id)]; }
  std::span<const Infoset> infosets() const { return infosets_; }
  std::span<const InfosetId> infosets_of(PlayerId p) const {
    return player_infosets_[static_cast<std::size_t>(index_of(p))];
  }
  // Flat layout shared by every per-(infoset, action) table.
  std::size_t action_offset(InfosetId id) const { return offsets_[static_cast<std::size_t>(id)]; }
  std::size_t total_actions() const { return offsets_.back(); }

  std::string_view label(std::int32_t label_id) const;
  // Multiplier that maps raw game payoffs to the stored [-1, 1] payoffs.
  double payoff_scale() const { return payoff_scale_; }

  // Utility of `p` at a terminal node.
  double utility(NodeId id, PlayerId p) const {
    double u = node(id).payoff0;
    return p == PlayerId::kPlayer0 ? u : -u;
  }

 private:
  friend class GameTreeBuilder;

  std::string name_;
  std::vector<Node> nodes_;
  std::vector<Infoset> infosets_;
  std::vector<InfosetId> player_infosets_[2];
  std::vector<std::size_t> offsets_;
  std::vector<std::string> labels_;
  double payoff_scale_ = 1.0;
};

// Incremental construction. Nodes start as placeholders; defining a node
// allocates its children as a contiguous block of new placeholders.
//
//   GameTreeBuilder b("toy");
//   const std::array probs{0.5, 0.5};
//   NodeId c = b.make_chance(b.root(), probs);
//   b.make_terminal(c, 1.0);
//   b.make_terminal(c + 1, -1.0);
//   GameTree tree = std::move(b).finish();
class GameTreeBuilder {
 public:
  explicit GameTreeBuilder(std::string name);

  NodeId root() const { return 0; }

  // Returns the id of the first child.
  NodeId make_decision(NodeId id, PlayerId player, std::string_view infoset_key,
                       std::span<const std::string> action_labels);
  NodeId make_decision(NodeId id, PlayerId player, std::string_view infoset_key,
                       int num_actions);
  NodeId make_chance(NodeId id, std::span<const double> probabilities,
                     std::span<const std::string> outcome_labels = {});
  void make_terminal(NodeId id, double payoff0);

  // Divides every terminal payoff by the largest absolute payoff so all
  // payoffs lie in [-1, 1]; the factor is kept as payoff_scale().
  void normalize_payoffs();
  void reserve(std::size_t nodes) { tree_.nodes_.reserve(nodes); }
  std::size_t num_nodes() const { return tree_.nodes_.size(); }

  // Throws std::logic_error if a placeholder was never defined.
  GameTree finish() &&;

 private:
  NodeId allocate_children(NodeId id, std::size_t count);
  std::int32_t intern(std::string_view label);

  GameTree tree_;
  std::vector<bool> defined_;
  std::unordered_map<std::string, InfosetId> infoset_ids_;
  std::unordered_map<std::string, std::int32_t> label_ids_;
};

struct Violation {
  enum class Kind {
    kChanceProbabilitySum,
    kNegativeProbability,
    kEmptyChildren,
    kBrokenParentLink,
    kInfosetPlayerMismatch,
    kInfosetActionCountMismatch,
    kInfosetMemberNotDecision,
    kDuplicateInfosetMember,
    kUncoveredDecisionNode,
    kImperfectRecall,
    kPayoffOutOfRange,
  };
  Kind kind;
  NodeId node = kNoNode;
  InfosetId infoset = kNoInfoset;
  std::string message;
};
std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind kind) const;
};

ValidationReport validate(const GameTree& tree);

TreeStats tree_stats(const GameTree& tree);

// Line-oriented debugging dump: "id kind parent label value".
void dump_tree(const GameTree& tree, std::ostream& os);

}  // namespace cfr_forge

#endif  // CFR_FORGE_GAME_TREE_HPP_
