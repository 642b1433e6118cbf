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

// Batch front end: (game x variant) grids, CSV convergence logs and a
// summary against a baseline variant.

#ifndef CFR_FORGE_BENCH_HPP_
#define CFR_FORGE_BENCH_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cfr_forge/solver.hpp"

namespace cfr_forge {

struct BenchPlan {
  std::vector<RunConfig> runs;
  std::filesystem::path out_dir = ".";
  bool write_csv = true;
  bool write_json = true;
  // Also writes <stem>_infosets.csv with the final per-infoset diagnostics.
  bool dump_infosets = false;
  Algorithm baseline = Algorithm::kPCFRPlus;
  int jobs = 1;
};

inline constexpr const char* kCsvHeader =
    "iteration,exploitability,total_pred_gap,total_state_gap,bound_thm1,bound_thm2,"
    "mean_alpha,max_alpha,wall_time_s";

inline constexpr const char* kInfosetCsvHeader =
    "infoset,key,player,realized_regret,bound_thm1,bound_thm2,sum_pred_gap,sum_state_gap,alpha";

// One CSV row without the trailing newline. Reals use 17 significant
// digits, so the row round-trips exactly.
std::string format_record(const ConvergenceRecord& rec);

// Rows of the per-infoset dump, header included. Diagnostic columns are
// "nan" when the run had diagnostics disabled.
std::string format_infoset_dump(const RunResult& result, const Variant& variant);

// "<game>_<algo>", e.g. "leduc_5_sapcfr+".
std::string run_stem(const RunConfig& config);

// (eps - eps_base) / eps_base * 100; nullopt when eps_base is zero.
std::optional<double> delta_vs_baseline_pct(double eps, double eps_base);
// "(-34.4%)".
std::string format_delta(double pct);

struct RunOutcome {
  RunConfig config;
  bool ok = false;
  std::string error;
  double final_exploitability = 0.0;
  double payoff_scale = 1.0;
};

// Runs every config on up to plan.jobs threads and writes the outputs.
// Returns 0 on success and 1 if any run or write failed. Progress and
// errors go to `log`.
int execute(const BenchPlan& plan, std::ostream& log);
// Same, also handing back the per-run outcomes in plan order.
int execute(const BenchPlan& plan, std::ostream& log, std::vector<RunOutcome>& outcomes);

// Prints the size statistics of each game. With `check_paper`, compares
// against reference_stats and returns 1 on any mismatch. Games without a
// reference row are listed as unchecked.
int stats_command(const std::vector<GameSpec>& games, bool check_paper, std::ostream& out);

}  // namespace cfr_forge

#endif  // CFR_FORGE_BENCH_HPP_
