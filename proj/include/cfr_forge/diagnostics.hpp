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

// Per-infoset tracking of realized counterfactual regret and the two
// regret-bound expressions of the asymmetric predictive update:
//
//   bound1 = sum_t ||r^t - r^{t-1}||^2 / (1 + alpha^t) + alpha^t ||R^{t+1} - R^t||^2
//   bound2 = sum_t ||r^t - r^{t-1} / (1 + alpha^t)||^2
//
// The realized regret max_a sum_t r^t(a) never exceeds the square root of
// either sum.

#ifndef CFR_FORGE_DIAGNOSTICS_HPP_
#define CFR_FORGE_DIAGNOSTICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cfr_forge/regret_minimizer.hpp"

namespace cfr_forge {

struct InfosetDiagnostics {
  std::vector<double> cum_regret;  // signed sum_t r^t
  double bound1_sum = 0.0;
  double bound2_sum = 0.0;
  double sum_sq_regret = 0.0;  // sum_t ||r^t||^2
  std::int64_t steps = 0;
  // Alpha of every recorded step when tracing is enabled.
  bool trace_alpha = false;
  std::vector<double> alpha_history;

  InfosetDiagnostics() = default;
  explicit InfosetDiagnostics(int num_actions)
      : cum_regret(static_cast<std::size_t>(num_actions), 0.0) {}
};

// Throws std::invalid_argument when the vector lengths differ.
void record_step(InfosetDiagnostics& diag, std::span<const double> regret,
                 std::span<const double> prev_regret, std::span<const double> new_cumulative,
                 std::span<const double> old_cumulative, double alpha);

// max_a cum_regret(a); may be negative.
double realized_regret(const InfosetDiagnostics& diag);

struct BoundCheck {
  double realized = 0.0;
  double bound1 = 0.0;  // sqrt(bound1_sum)
  double bound2 = 0.0;  // sqrt(bound2_sum)
  bool satisfied = true;
};

BoundCheck bound_check(const InfosetDiagnostics& diag, double tolerance = 1e-6);

struct DiagnosticTotals {
  double total_pred_gap = 0.0;
  double total_state_gap = 0.0;
  double total_bound1 = 0.0;  // NaN when no diagnostics were recorded
  double total_bound2 = 0.0;
  double mean_alpha = 0.0;
  double max_alpha = 0.0;
};

// Sums over all infosets. Alpha statistics use compute_alpha on the current
// states. Pass an empty `diags` when diagnostics are disabled.
DiagnosticTotals aggregate(std::span<const InfosetDiagnostics> diags,
                           std::span<const LocalRegretState> states, const Variant& variant);

}  // namespace cfr_forge

#endif  // CFR_FORGE_DIAGNOSTICS_HPP_
