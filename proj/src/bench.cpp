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

#include "cfr_forge/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace cfr_forge {
namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_summary(const BenchPlan& plan, const std::vector<RunOutcome>& outcomes) {
  // Baseline exploitability per (game, iterations).
  std::map<std::pair<std::string, int>, double> base;
  for (const RunOutcome& o : outcomes) {
    if (o.ok && o.config.variant.algorithm == plan.baseline) {
      base.emplace(std::make_pair(o.config.game.canonical_name(), o.config.iterations),
                   o.final_exploitability);
    }
  }
  nlohmann::json runs = nlohmann::json::array();
  for (const RunOutcome& o : outcomes) {
    if (!o.ok) continue;
    nlohmann::json run;
    run["game"] = o.config.game.canonical_name();
    run["algo"] = o.config.variant.name();
    run["iters"] = o.config.iterations;
    run["final_exploitability"] = o.final_exploitability;
    run["payoff_scale"] = o.payoff_scale;
    run["delta_vs_baseline_pct"] = nullptr;
    auto it = base.find({o.config.game.canonical_name(), o.config.iterations});
    if (it != base.end()) {
      if (auto pct = delta_vs_baseline_pct(o.final_exploitability, it->second)) {
        run["delta_vs_baseline_pct"] = *pct;
      }
    }
    runs.push_back(std::move(run));
  }
  nlohmann::json doc;
  doc["runs"] = std::move(runs);
  doc["baseline"] = std::string(to_string(plan.baseline));
  std::ofstream out(plan.out_dir / "summary.json");
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + (plan.out_dir / "summary.json").string());
}

void print_table(const BenchPlan& plan, const std::vector<RunOutcome>& outcomes,
                 std::ostream& log) {
  std::map<std::string, double> base;
  for (const RunOutcome& o : outcomes) {
    if (o.ok && o.config.variant.algorithm == plan.baseline) {
      base.emplace(o.config.game.canonical_name(), o.final_exploitability);
    }
  }
  char line[160];
  std::snprintf(line, sizeof(line), "%-22s %-10s %8s %14s %10s\n", "game", "algo", "iters",
                "exploitability", "delta");
  log << line;
  for (const RunOutcome& o : outcomes) {
    const std::string game = o.config.game.canonical_name();
    if (!o.ok) {
      std::snprintf(line, sizeof(line), "%-22s %-10s %8d %14s\n", game.c_str(),
                    o.config.variant.name().c_str(), o.config.iterations, "FAILED");
      log << line;
      continue;
    }
    std::string delta;
    auto it = base.find(game);
    if (it != base.end()) {
      if (auto pct = delta_vs_baseline_pct(o.final_exploitability, it->second)) {
        delta = format_delta(*pct);
      }
    }
    std::snprintf(line, sizeof(line), "%-22s %-10s %8d %14.4e %10s\n", game.c_str(),
                  o.config.variant.name().c_str(), o.config.iterations, o.final_exploitability,
                  delta.c_str());
    log << line;
  }
}

}  // namespace

std::string format_record(const ConvergenceRecord& rec) {
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.6f", rec.wall_time_s);
  std::string row = std::to_string(rec.iteration);
  for (double x : {rec.exploitability, rec.total_pred_gap, rec.total_state_gap, rec.bound_thm1,
                   rec.bound_thm2, rec.mean_alpha, rec.max_alpha}) {
    row += ',';
    row += fmt17(x);
  }
  row += ',';
  row += wall;
  return row;
}

std::string format_infoset_dump(const RunResult& result, const Variant& variant) {
  std::string out = std::string(kInfosetCsvHeader) + "\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const Infoset& info : result.tree->infosets()) {
    const auto i = static_cast<std::size_t>(info.id);
    const LocalRegretState& st = result.states[i];
    BoundCheck check{nan, nan, nan, false};
    if (!result.diagnostics.empty()) check = bound_check(result.diagnostics[i]);
    const double alpha = variant.is_predictive() ? compute_alpha(st, variant) : 0.0;
    out += std::to_string(info.id) + "," + info.key + "," + std::to_string(index_of(info.player));
    for (double x : {check.realized, check.bound1, check.bound2, st.sum_pred_gap, st.sum_state_gap,
                     alpha}) {
      out += ',';
      out += fmt17(x);
    }
    out += '\n';
  }
  return out;
}

std::string run_stem(const RunConfig& config) {
  return config.game.canonical_name() + "_" + config.variant.name();
}

std::optional<double> delta_vs_baseline_pct(double eps, double eps_base) {
  if (eps_base == 0.0) return std::nullopt;
  return (eps - eps_base) / eps_base * 100.0;
}

std::string format_delta(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "(%+.1f%%)", pct);
  return buf;
}

int execute(const BenchPlan& plan, std::ostream& log) {
  std::vector<RunOutcome> outcomes;
  return execute(plan, log, outcomes);
}

int execute(const BenchPlan& plan, std::ostream& log, std::vector<RunOutcome>& outcomes) {
  outcomes.clear();
  if (plan.runs.empty()) return 0;

  std::set<std::string> stems;
  for (const RunConfig& c : plan.runs) {
    if (!stems.insert(run_stem(c)).second) {
      log << "error: two runs would write " << run_stem(c) << ".csv\n";
      return 1;
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(plan.out_dir, ec);
  if (ec) {
    log << "error: cannot create " << plan.out_dir.string() << ": " << ec.message() << '\n';
    return 1;
  }

  outcomes.resize(plan.runs.size());
  std::mutex log_mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.runs.size(); i = next++) {
      RunOutcome& out = outcomes[i];
      out.config = plan.runs[i];
      const std::string stem = run_stem(out.config);
      try {
        std::ofstream csv;
        if (plan.write_csv) {
          csv.open(plan.out_dir / (stem + ".csv"));
          if (!csv) throw std::runtime_error("cannot open " + stem + ".csv for writing");
          csv << kCsvHeader << '\n';
        }
        RecordSink sink;
        if (plan.write_csv) sink = [&csv](const ConvergenceRecord& r) { csv << format_record(r) << '\n'; };
        const RunResult result = run(out.config, sink);
        if (plan.write_csv && !csv.flush()) throw std::runtime_error("write failed for " + stem);
        if (plan.dump_infosets) {
          std::ofstream dump(plan.out_dir / (stem + "_infosets.csv"));
          dump << format_infoset_dump(result, out.config.variant);
          if (!dump) throw std::runtime_error("write failed for " + stem + "_infosets.csv");
        }
        out.final_exploitability = result.records.back().exploitability;
        out.payoff_scale = result.tree->payoff_scale();
        out.ok = true;
        std::lock_guard<std::mutex> lock(log_mu);
        log << "done " << stem << " eps=" << fmt17(out.final_exploitability) << '\n';
      } catch (const std::exception& e) {
        out.error = e.what();
        std::lock_guard<std::mutex> lock(log_mu);
        log << "error: " << stem << ": " << e.what() << '\n';
      }
    }
  };
  const int jobs = std::clamp<int>(plan.jobs, 1, static_cast<int>(plan.runs.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  int code = 0;
  for (const RunOutcome& o : outcomes) code |= o.ok ? 0 : 1;
  if (plan.write_json) {
    try {
      write_summary(plan, outcomes);
    } catch (const std::exception& e) {
      log << "error: " << e.what() << '\n';
      code = 1;
    }
  }
  print_table(plan, outcomes, log);
  return code;
}

int stats_command(const std::vector<GameSpec>& games, bool check_paper, std::ostream& out) {
  char line[200];
  std::snprintf(line, sizeof(line), "%-22s %12s %10s %12s %6s %8s %12s%s\n", "game", "histories",
                "infosets", "terminals", "depth", "max_inf", "payoff_scale",
                check_paper ? "  check" : "");
  out << line;
  int code = 0;
  for (const GameSpec& spec : games) {
    const GameTree tree = build_game(spec);
    const TreeStats s = tree_stats(tree);
    std::string verdict;
    if (check_paper) {
      const auto ref = reference_stats(spec);
      if (!ref) {
        verdict = "  unchecked";
      } else if (*ref == s) {
        verdict = "  ok";
      } else {
        std::ostringstream os;
        os << "  MISMATCH expected " << *ref;
        verdict = os.str();
        code = 1;
      }
    }
    std::snprintf(line, sizeof(line), "%-22s %12lld %10lld %12lld %6lld %8lld %12.6g%s\n",
                  spec.canonical_name().c_str(), static_cast<long long>(s.histories),
                  static_cast<long long>(s.infosets), static_cast<long long>(s.terminal_histories),
                  static_cast<long long>(s.depth), static_cast<long long>(s.max_infoset_size),
                  tree.payoff_scale(), verdict.c_str());
    out << line;
  }
  return code;
}

}  // namespace cfr_forge
