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

#include "cfr_forge/solver.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "cfr_forge/exploitability.hpp"

namespace cfr_forge {

constexpr double kApdAverageExponent = 2.5;

std::string_view to_string(UpdateMode mode) {
  return mode == UpdateMode::kAlternating ? "alternating" : "simultaneous";
}

std::string_view to_string(AveragingScheme scheme) {
  switch (scheme) {
    case AveragingScheme::kLinear: return "linear";
    case AveragingScheme::kQuadratic: return "quadratic";
    case AveragingScheme::kAPDWeighted: return "apd";
  }
  return "?";
}

UpdateMode parse_update_mode(std::string_view text) {
  if (text == "alternating") return UpdateMode::kAlternating;
  if (text == "simultaneous") return UpdateMode::kSimultaneous;
  throw std::invalid_argument("unknown update mode '" + std::string(text) +
                              "' (expected alternating or simultaneous)");
}

AveragingScheme parse_averaging(std::string_view text) {
  if (text == "linear") return AveragingScheme::kLinear;
  if (text == "quadratic") return AveragingScheme::kQuadratic;
  if (text == "apd") return AveragingScheme::kAPDWeighted;
  throw std::invalid_argument("unknown averaging scheme '" + std::string(text) +
                              "' (expected linear, quadratic or apd)");
}

// ---------------------------------------------------------------------------
// Average strategy

AverageStrategy::AverageStrategy(const GameTree& tree, AveragingScheme scheme)
    : tree_(&tree), scheme_(scheme), acc_(tree.total_actions(), 0.0) {}

std::span<const double> AverageStrategy::accumulator(InfosetId id) const {
  const std::size_t off = tree_->action_offset(id);
  return std::span<const double>(acc_).subspan(off, tree_->action_offset(id + 1) - off);
}

void AverageStrategy::accumulate(InfosetId id, std::span<const double> sigma, double own_reach,
                                 int t) {
  const std::size_t off = tree_->action_offset(id);
  const std::size_t n = tree_->action_offset(id + 1) - off;
  if (sigma.size() != n) throw std::invalid_argument("AverageStrategy: strategy length mismatch");
  double* acc = acc_.data() + off;
  const double td = static_cast<double>(t);
  switch (scheme_) {
    case AveragingScheme::kLinear:
      for (std::size_t a = 0; a < n; ++a) acc[a] += own_reach * sigma[a];
      break;
    case AveragingScheme::kQuadratic: {
      const double w = td * td * own_reach;
      for (std::size_t a = 0; a < n; ++a) acc[a] += w * sigma[a];
      break;
    }
    case AveragingScheme::kAPDWeighted: {
      const double decay = std::pow((td - 1.0) / td, kApdAverageExponent);
      for (std::size_t a = 0; a < n; ++a) acc[a] = decay * acc[a] + own_reach * sigma[a];
      break;
    }
  }
}

void accumulate_average(AverageStrategy& avg, const StrategyProfile& profile,
                        std::span<const double> own_reach, PlayerId player, int t) {
  for (InfosetId id : avg.tree().infosets_of(player)) {
    avg.accumulate(id, profile.at(id), own_reach[static_cast<std::size_t>(id)], t);
  }
}

StrategyProfile extract_average(const AverageStrategy& avg) {
  const GameTree& tree = avg.tree();
  StrategyProfile out = StrategyProfile::empty(tree);
  for (const Infoset& info : tree.infosets()) {
    const auto acc = avg.accumulator(info.id);
    auto row = out.mutable_at(info.id);
    double sum = 0.0;
    for (double x : acc) sum += x;
    for (std::size_t a = 0; a < row.size(); ++a) {
      row[a] = sum > 0.0 ? acc[a] / sum : 1.0 / static_cast<double>(row.size());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Log schedule

LogSchedule LogSchedule::every(int n) {
  if (n < 1) throw std::invalid_argument("log schedule interval must be >= 1");
  return LogSchedule(Kind::kEvery, n);
}

LogSchedule LogSchedule::parse(std::string_view text) {
  if (text == "log") return log();
  if (text == "pow2") return pow2();
  if (text == "final") return final_only();
  if (text.substr(0, 6) == "every:") {
    const std::string_view digits = text.substr(6);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) return every(n);
  }
  throw std::invalid_argument("unknown log schedule '" + std::string(text) +
                              "' (expected log, pow2, every:N or final)");
}

bool LogSchedule::matches(int t, int total) const {
  if (t == total) return true;
  switch (kind_) {
    case Kind::kLog: {
      int step = 1;
      while (t >= 10 * step) step *= 10;
      return t % step == 0;
    }
    case Kind::kPow2:
      return t > 0 && (t & (t - 1)) == 0;
    case Kind::kEvery:
      return t % every_ == 0;
    case Kind::kFinal:
      return false;
  }
  return false;
}

std::string LogSchedule::to_string() const {
  switch (kind_) {
    case Kind::kLog: return "log";
    case Kind::kPow2: return "pow2";
    case Kind::kEvery: return "every:" + std::to_string(every_);
    case Kind::kFinal: return "final";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Solver

Solver::Solver(const GameTree& tree, SolverOptions options)
    : tree_(&tree),
      options_(std::move(options)),
      current_(StrategyProfile::uniform(tree)),
      average_(tree, options_.averaging),
      evaluator_(tree) {
  options_.variant.validate();
  states_.reserve(tree.num_infosets());
  for (const Infoset& info : tree.infosets()) states_.emplace_back(info.num_actions);
  if (options_.diagnostics) {
    diags_.reserve(tree.num_infosets());
    for (const Infoset& info : tree.infosets()) {
      diags_.emplace_back(info.num_actions);
      diags_.back().trace_alpha = options_.trace_alpha;
    }
  }
  predict(PlayerId::kPlayer0, 1);
  predict(PlayerId::kPlayer1, 1);
}

void Solver::set_update_observer(std::function<void(const UpdateEvent&)> observer) {
  observer_ = std::move(observer);
}

void Solver::predict(PlayerId player, int t) {
  for (InfosetId id : tree_->infosets_of(player)) {
    predict_strategy(states_[static_cast<std::size_t>(id)], options_.variant, t,
                     current_.mutable_at(id));
    assert(is_simplex(current_.at(id), 1e-12));
  }
}

void Solver::observe(PlayerId player) {
  const bool track = options_.diagnostics || static_cast<bool>(observer_);
  for (InfosetId id : tree_->infosets_of(player)) {
    LocalRegretState& state = states_[static_cast<std::size_t>(id)];
    const auto sigma = current_.at(id);
    const auto values = evaluator_.values(id);
    regret_.resize(sigma.size());
    instantaneous_regret(values, sigma, regret_);
    if (track) {
      old_cumulative_.assign(state.cumulative.begin(), state.cumulative.end());
      prev_regret_.assign(state.last_regret.begin(), state.last_regret.end());
    }
    const ObservedStep step = observe_regret(state, regret_, options_.variant, t_);
    if (options_.diagnostics) {
      record_step(diags_[static_cast<std::size_t>(id)], regret_, prev_regret_, state.cumulative,
                  old_cumulative_, step.alpha);
    }
    if (observer_) {
      UpdateEvent event;
      event.infoset = id;
      event.t = t_;
      event.alpha = step.alpha;
      event.sigma = sigma;
      event.values = values;
      event.regret = regret_;
      event.prev_regret = prev_regret_;
      event.old_cumulative = old_cumulative_;
      event.new_cumulative = state.cumulative;
      observer_(event);
    }
  }
}

// Each half-iteration evaluates the player against the opponent's latest
// strategy, folds in the regrets and immediately re-predicts, so under
// alternating updates player 1 faces player 0's post-update strategy.
void Solver::iterate() {
  ++t_;
  constexpr PlayerId kPlayers[] = {PlayerId::kPlayer0, PlayerId::kPlayer1};
  const bool alternating = options_.mode == UpdateMode::kAlternating;
  for (PlayerId p : kPlayers) {
    evaluator_.evaluate(current_, p);
    observe(p);
    accumulate_average(average_, current_, evaluator_.all_own_reach(), p, t_);
    if (alternating) predict(p, t_ + 1);
  }
  if (!alternating) {
    for (PlayerId p : kPlayers) predict(p, t_ + 1);
  }
}

DiagnosticTotals Solver::totals() const { return aggregate(diags_, states_, options_.variant); }

// ---------------------------------------------------------------------------
// Runs

RunResult run(std::shared_ptr<const GameTree> tree, const RunConfig& config,
              const RecordSink& sink) {
  if (config.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  SolverOptions options;
  options.variant = config.variant;
  options.mode = config.mode;
  options.averaging = config.averaging;
  options.diagnostics = config.diagnostics;
  Solver solver(*tree, options);

  RunResult result;
  const auto start = std::chrono::steady_clock::now();
  for (int t = 1; t <= config.iterations; ++t) {
    solver.iterate();
    if (!config.log_schedule.matches(t, config.iterations)) continue;
    const StrategyProfile avg = solver.average();
    const DiagnosticTotals totals = solver.totals();
    ConvergenceRecord rec;
    rec.iteration = t;
    rec.exploitability = exploitability(*tree, avg);
    rec.total_pred_gap = totals.total_pred_gap;
    rec.total_state_gap = totals.total_state_gap;
    rec.bound_thm1 = totals.total_bound1;
    rec.bound_thm2 = totals.total_bound2;
    rec.mean_alpha = totals.mean_alpha;
    rec.max_alpha = totals.max_alpha;
    if (config.record_wall_time) {
      rec.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (sink) sink(rec);
    result.records.push_back(rec);
  }
  result.average = solver.average();
  result.states.assign(solver.states().begin(), solver.states().end());
  result.diagnostics.assign(solver.diagnostics().begin(), solver.diagnostics().end());
  result.tree = std::move(tree);
  return result;
}

RunResult run(const RunConfig& config, const RecordSink& sink) {
  return run(std::make_shared<const GameTree>(build_game(config.game)), config, sink);
}

}  // namespace cfr_forge
