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

#include "cfr_forge/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfr_forge {

void record_step(InfosetDiagnostics& diag, std::span<const double> regret,
                 std::span<const double> prev_regret, std::span<const double> new_cumulative,
                 std::span<const double> old_cumulative, double alpha) {
  const std::size_t n = diag.cum_regret.size();
  if (regret.size() != n || prev_regret.size() != n || new_cumulative.size() != n ||
      old_cumulative.size() != n) {
    throw std::invalid_argument("record_step: vector length mismatch");
  }
  const double scale = 1.0 / (1.0 + alpha);
  double pred_gap = 0.0;
  double state_gap = 0.0;
  double shrunk_gap = 0.0;
  double sq = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    diag.cum_regret[a] += regret[a];
    const double dr = regret[a] - prev_regret[a];
    const double dR = new_cumulative[a] - old_cumulative[a];
    const double ds = regret[a] - scale * prev_regret[a];
    pred_gap += dr * dr;
    state_gap += dR * dR;
    shrunk_gap += ds * ds;
    sq += regret[a] * regret[a];
  }
  diag.bound1_sum += pred_gap * scale + alpha * state_gap;
  diag.bound2_sum += shrunk_gap;
  diag.sum_sq_regret += sq;
  ++diag.steps;
  if (diag.trace_alpha) diag.alpha_history.push_back(alpha);
}

double realized_regret(const InfosetDiagnostics& diag) {
  if (diag.cum_regret.empty()) return 0.0;
  return *std::max_element(diag.cum_regret.begin(), diag.cum_regret.end());
}

BoundCheck bound_check(const InfosetDiagnostics& diag, double tolerance) {
  BoundCheck check;
  check.realized = realized_regret(diag);
  check.bound1 = std::sqrt(diag.bound1_sum);
  check.bound2 = std::sqrt(diag.bound2_sum);
  check.satisfied = check.realized <= std::min(check.bound1, check.bound2) + tolerance;
  return check;
}

DiagnosticTotals aggregate(std::span<const InfosetDiagnostics> diags,
                           std::span<const LocalRegretState> states, const Variant& variant) {
  DiagnosticTotals totals;
  double alpha_sum = 0.0;
  for (const LocalRegretState& s : states) {
    totals.total_pred_gap += s.sum_pred_gap;
    totals.total_state_gap += s.sum_state_gap;
    const double alpha = variant.is_predictive() ? compute_alpha(s, variant) : 0.0;
    alpha_sum += alpha;
    totals.max_alpha = std::max(totals.max_alpha, alpha);
  }
  if (!states.empty()) totals.mean_alpha = alpha_sum / static_cast<double>(states.size());
  if (diags.empty() && !states.empty()) {
    totals.total_bound1 = std::numeric_limits<double>::quiet_NaN();
    totals.total_bound2 = std::numeric_limits<double>::quiet_NaN();
  }
  for (const InfosetDiagnostics& d : diags) {
    totals.total_bound1 += d.bound1_sum;
    totals.total_bound2 += d.bound2_sum;
  }
  return totals;
}

}  // namespace cfr_forge
