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

#include "cfr_forge/cli.hpp"

#include <optional>
#include <ostream>

#include "CLI11.hpp"

namespace cfr_forge {
namespace {

struct BenchArgs {
  std::vector<std::string> games;
  std::vector<std::string> algos;
  int iters = 5000;
  std::string mode = "alternating";
  std::optional<std::string> avg;
  std::optional<double> alpha_max;
  std::optional<double> lambda;
  std::optional<double> kappa;
  std::optional<double> beta;
  std::string log_schedule = "log";
  std::string diagnostics = "off";
  std::string out = ".";
  std::vector<std::string> formats = {"csv", "json"};
  int jobs = 1;
  std::string timing = "off";
  std::string infoset_dump = "off";
  std::string baseline = "pcfr+";
};

struct StatsArgs {
  std::vector<std::string> games;
  bool check_paper = false;
};

const CLI::IsMember kOnOff({"on", "off"});

GameSpec game_arg(const std::string& text) {
  try {
    return parse_game_spec(text);
  } catch (const std::invalid_argument& e) {
    throw CliError("invalid --game '" + text + "': " + e.what(), 2);
  }
}

Variant algo_arg(const std::string& text) {
  try {
    return parse_variant(text);
  } catch (const std::invalid_argument& e) {
    throw CliError("invalid --algo '" + text + "': " + e.what(), 2);
  }
}

BenchPlan build_plan(const BenchArgs& a, std::vector<std::string>& notices) {
  BenchPlan plan;
  plan.out_dir = a.out;
  plan.jobs = a.jobs;
  plan.write_csv = plan.write_json = false;
  for (const std::string& f : a.formats) {
    if (f == "csv") plan.write_csv = true;
    if (f == "json") plan.write_json = true;
  }
  plan.baseline = algo_arg(a.baseline).algorithm;

  RunConfig base;
  base.iterations = a.iters;
  try {
    base.mode = parse_update_mode(a.mode);
    if (a.avg) base.averaging = parse_averaging(*a.avg);
    base.log_schedule = LogSchedule::parse(a.log_schedule);
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what(), 2);
  }
  base.diagnostics = a.diagnostics == "on";
  plan.dump_infosets = a.infoset_dump == "on";
  if (plan.dump_infosets && !base.diagnostics) {
    base.diagnostics = true;
    notices.push_back("note: --infoset-dump on enables --diagnostics");
  }
  base.record_wall_time = a.timing == "on";

  std::vector<GameSpec> games;
  for (const std::string& g : a.games) games.push_back(game_arg(g));
  std::vector<Variant> variants;
  for (const std::string& s : a.algos) {
    Variant v = algo_arg(s);
    if (a.alpha_max) v.alpha_max = *a.alpha_max;
    if (a.lambda) v.lambda = *a.lambda;
    if (a.kappa) v.kappa = *a.kappa;
    if (a.beta) v.beta = *a.beta;
    try {
      v.validate();
    } catch (const std::invalid_argument& e) {
      throw CliError("invalid hyperparameters for " + v.name() + ": " + e.what(), 2);
    }
    variants.push_back(v);
  }

  for (const GameSpec& g : games) {
    for (const Variant& v : variants) {
      RunConfig c = base;
      c.game = g;
      c.variant = v;
      if (v.algorithm == Algorithm::kAPDCFRPlus) c.averaging = AveragingScheme::kAPDWeighted;
      plan.runs.push_back(c);
    }
  }
  for (const Variant& v : variants) {
    if (v.algorithm == Algorithm::kAPDCFRPlus && base.averaging != AveragingScheme::kAPDWeighted) {
      notices.push_back("note: apdcfr+ always uses apd averaging; --avg " +
                        std::string(to_string(base.averaging)) + " ignored for it");
      break;
    }
  }
  return plan;
}

}  // namespace

CliCommand parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"cfr-forge: counterfactual regret minimization benchmarks", "cfr_forge"};
  app.require_subcommand(1);

  BenchArgs b;
  CLI::App* bench = app.add_subcommand("bench", "Run a (game x algorithm) grid");
  bench->add_option("--game", b.games, "Game spec, e.g. kuhn, leduc:5, goofspiel:4 (repeatable)");
  bench->add_option("--algo", b.algos,
                    "cfr, cfr+, dcfr, pcfr+, apcfr+, apcfr+v2, sapcfr+, apdcfr+ (repeatable)");
  bench->add_option("--iters", b.iters, "Iterations per run")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--mode", b.mode, "alternating | simultaneous")->capture_default_str();
  bench->add_option("--avg", b.avg, "linear | quadratic | apd (default quadratic)");
  bench->add_option("--alpha-max", b.alpha_max, "Upper bound on the learned alpha");
  bench->add_option("--lambda", b.lambda, "apdcfr+ discount scale");
  bench->add_option("--kappa", b.kappa, "apdcfr+ discount offset");
  bench->add_option("--beta", b.beta, "apdcfr+ discount exponent");
  bench->add_option("--log-schedule", b.log_schedule, "log | pow2 | every:N | final")
      ->capture_default_str();
  bench->add_option("--diagnostics", b.diagnostics, "Track regret bounds: on | off")
      ->capture_default_str()
      ->check(kOnOff);
  bench->add_option("--out", b.out, "Output directory")->capture_default_str();
  bench->add_option("--format", b.formats, "csv,json")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--jobs", b.jobs, "Parallel runs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--timing", b.timing, "Record wall time: on | off")
      ->capture_default_str()
      ->check(kOnOff);
  bench->add_option("--infoset-dump", b.infoset_dump,
                    "Write <game>_<algo>_infosets.csv with per-infoset bounds: on | off")
      ->capture_default_str()
      ->check(kOnOff);
  bench->add_option("--baseline", b.baseline, "Variant the deltas refer to")
      ->capture_default_str();

  StatsArgs s;
  CLI::App* stats = app.add_subcommand("stats", "Print game tree sizes");
  stats->add_option("--game", s.games, "Game spec (repeatable; default: all reference games)");
  stats->add_flag("--check-paper", s.check_paper, "Compare against the reference sizes");

  CliCommand cmd;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cmd.kind = CliCommand::Kind::kHelp;
    cmd.help = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw CliError(std::string(e.what()) + "\n" + app.help(), 2);
  }

  if (bench->parsed()) {
    cmd.kind = CliCommand::Kind::kBench;
    cmd.plan = build_plan(b, cmd.notices);
  } else {
    cmd.kind = CliCommand::Kind::kStats;
    cmd.check_paper = s.check_paper;
    if (s.games.empty()) {
      cmd.games = reference_games();
    } else {
      for (const std::string& g : s.games) cmd.games.push_back(game_arg(g));
    }
  }
  return cmd;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliCommand cmd;
  try {
    cmd = parse_cli(args);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
  for (const std::string& n : cmd.notices) err << n << '\n';
  switch (cmd.kind) {
    case CliCommand::Kind::kHelp:
      out << cmd.help;
      return 0;
    case CliCommand::Kind::kBench:
      return execute(cmd.plan, out);
    case CliCommand::Kind::kStats:
      try {
        return stats_command(cmd.games, cmd.check_paper, out);
      } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
      }
  }
  return 1;
}

}  // namespace cfr_forge
