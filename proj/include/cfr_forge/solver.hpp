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

#ifndef CFR_FORGE_SOLVER_HPP_
#define CFR_FORGE_SOLVER_HPP_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfr_forge/counterfactual.hpp"
#include "cfr_forge/diagnostics.hpp"
#include "cfr_forge/game_tree.hpp"
#include "cfr_forge/games.hpp"
#include "cfr_forge/regret_minimizer.hpp"
#include "cfr_forge/strategy.hpp"

namespace cfr_forge {

enum class UpdateMode { kAlternating, kSimultaneous };
enum class AveragingScheme { kLinear, kQuadratic, kAPDWeighted };

std::string_view to_string(UpdateMode mode);
std::string_view to_string(AveragingScheme scheme);
// "alternating" | "simultaneous"; throws std::invalid_argument otherwise.
UpdateMode parse_update_mode(std::string_view text);
// "linear" | "quadratic" | "apd"; throws std::invalid_argument otherwise.
AveragingScheme parse_averaging(std::string_view text);

// Weighted sums of the iterates, one accumulator per infoset.
//   linear:    acc += pi_i * sigma
//   quadratic: acc += t^2 * pi_i * sigma
//   apd:       acc = ((t-1)/t)^2.5 * acc + pi_i * sigma
class AverageStrategy {
 public:
  AverageStrategy(const GameTree& tree, AveragingScheme scheme);

  void accumulate(InfosetId id, std::span<const double> sigma, double own_reach, int t);
  std::span<const double> accumulator(InfosetId id) const;
  AveragingScheme scheme() const { return scheme_; }
  const GameTree& tree() const { return *tree_; }

 private:
  const GameTree* tree_;
  AveragingScheme scheme_;
  std::vector<double> acc_;
};

// Accumulates every infoset of `player`. `own_reach` is indexed by infoset.
void accumulate_average(AverageStrategy& avg, const StrategyProfile& profile,
                        std::span<const double> own_reach, PlayerId player, int t);

// Normalizes every accumulator; all-zero accumulators become uniform.
StrategyProfile extract_average(const AverageStrategy& avg);

// Iterations at which a run logs a ConvergenceRecord. The final iteration
// is always logged.
class LogSchedule {
 public:
  enum class Kind { kLog, kPow2, kEvery, kFinal };

  // 1..10, 20..100, 200..1000, ...
  static LogSchedule log() { return LogSchedule(Kind::kLog, 0); }
  static LogSchedule pow2() { return LogSchedule(Kind::kPow2, 0); }
  static LogSchedule every(int n);
  static LogSchedule final_only() { return LogSchedule(Kind::kFinal, 0); }
  // "log" | "pow2" | "every:N" | "final".
  static LogSchedule parse(std::string_view text);

  bool matches(int t, int total) const;
  std::string to_string() const;
  Kind kind() const { return kind_; }

 private:
  LogSchedule(Kind kind, int every) : kind_(kind), every_(every) {}
  Kind kind_;
  int every_;
};

struct SolverOptions {
  Variant variant;
  UpdateMode mode = UpdateMode::kAlternating;
  AveragingScheme averaging = AveragingScheme::kQuadratic;
  bool diagnostics = false;
  bool trace_alpha = false;
};

// One minimizer update, reported to the update observer before the next
// infoset is processed.
struct UpdateEvent {
  InfosetId infoset = kNoInfoset;
  int t = 0;
  double alpha = 0.0;
  std::span<const double> sigma;
  std::span<const double> values;
  std::span<const double> regret;
  std::span<const double> prev_regret;
  std::span<const double> old_cumulative;
  std::span<const double> new_cumulative;
};

class Solver {
 public:
  Solver(const GameTree& tree, SolverOptions options);

  // Runs iteration t = iteration() + 1: evaluates the strategies in
  // current(), updates the minimizers and the average, and predicts the
  // strategies for iteration t + 1.
  void iterate();
  int iteration() const { return t_; }

  const GameTree& tree() const { return *tree_; }
  const SolverOptions& options() const { return options_; }
  // Strategies the next iterate() will play; uniform before the first.
  const StrategyProfile& current() const { return current_; }
  const AverageStrategy& average_accumulator() const { return average_; }
  StrategyProfile average() const { return extract_average(average_); }
  std::span<const LocalRegretState> states() const { return states_; }
  // Empty unless diagnostics are enabled.
  std::span<const InfosetDiagnostics> diagnostics() const { return diags_; }
  DiagnosticTotals totals() const;

  void set_update_observer(std::function<void(const UpdateEvent&)> observer);

 private:
  void predict(PlayerId player, int t);
  void observe(PlayerId player);

  const GameTree* tree_;
  SolverOptions options_;
  int t_ = 0;
  StrategyProfile current_;
  AverageStrategy average_;
  std::vector<LocalRegretState> states_;
  std::vector<InfosetDiagnostics> diags_;
  CounterfactualEvaluator evaluator_;
  std::function<void(const UpdateEvent&)> observer_;
  std::vector<double> regret_;
  std::vector<double> old_cumulative_;
  std::vector<double> prev_regret_;
};

struct RunConfig {
  GameSpec game;
  Variant variant;
  int iterations = 5000;
  UpdateMode mode = UpdateMode::kAlternating;
  AveragingScheme averaging = AveragingScheme::kQuadratic;
  LogSchedule log_schedule = LogSchedule::log();
  bool diagnostics = false;
  // Fills ConvergenceRecord::wall_time_s; otherwise it stays 0 so that
  // record streams are reproducible.
  bool record_wall_time = false;
};

struct ConvergenceRecord {
  int iteration = 0;
  double exploitability = 0.0;
  double total_pred_gap = 0.0;
  double total_state_gap = 0.0;
  double bound_thm1 = 0.0;
  double bound_thm2 = 0.0;
  double mean_alpha = 0.0;
  double max_alpha = 0.0;
  double wall_time_s = 0.0;
};

struct RunResult {
  std::shared_ptr<const GameTree> tree;
  StrategyProfile average;
  std::vector<ConvergenceRecord> records;
  // Final per-infoset state, indexed by InfosetId. `diagnostics` is empty
  // unless config.diagnostics is set.
  std::vector<LocalRegretState> states;
  std::vector<InfosetDiagnostics> diagnostics;
};

using RecordSink = std::function<void(const ConvergenceRecord&)>;

// Solves `tree` for config.iterations iterations. config.game is unused.
RunResult run(std::shared_ptr<const GameTree> tree, const RunConfig& config,
              const RecordSink& sink = {});
// Builds config.game first.
RunResult run(const RunConfig& config, const RecordSink& sink = {});

}  // namespace cfr_forge

#endif  // CFR_FORGE_SOLVER_HPP_
