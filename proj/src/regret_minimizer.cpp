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

#include "cfr_forge/regret_minimizer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <utility>

namespace cfr_forge {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 8> kNames = {{
    {Algorithm::kCFR, "cfr"},
    {Algorithm::kCFRPlus, "cfr+"},
    {Algorithm::kDCFR, "dcfr"},
    {Algorithm::kPCFRPlus, "pcfr+"},
    {Algorithm::kAPCFRPlus, "apcfr+"},
    {Algorithm::kAPCFRPlusV2, "apcfr+v2"},
    {Algorithm::kSAPCFRPlus, "sapcfr+"},
    {Algorithm::kAPDCFRPlus, "apdcfr+"},
}};

constexpr double kSymmetricAlpha = 2.0;

double gap_ratio_alpha(double pred_gap, double state_gap, double alpha_max) {
  if (state_gap == 0.0) return pred_gap == 0.0 ? 0.0 : alpha_max;
  return std::min(std::sqrt(pred_gap / state_gap), alpha_max);
}

// Normalizes the positive part of `v` in place; uniform if it is all zero.
void normalize_positive(std::span<double> v) {
  double sum = 0.0;
  for (double& x : v) {
    x = std::max(x, 0.0);
    sum += x;
  }
  if (sum > 0.0) {
    for (double& x : v) x /= sum;
  } else {
    std::fill(v.begin(), v.end(), 1.0 / static_cast<double>(v.size()));
  }
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "?";
}

Variant Variant::of(Algorithm algorithm) {
  Variant v;
  v.algorithm = algorithm;
  if (algorithm == Algorithm::kAPDCFRPlus) v.alpha_max = 9.0;
  return v;
}

bool Variant::floors_regret() const {
  return algorithm != Algorithm::kCFR && algorithm != Algorithm::kDCFR;
}

bool Variant::is_predictive() const {
  switch (algorithm) {
    case Algorithm::kPCFRPlus:
    case Algorithm::kAPCFRPlus:
    case Algorithm::kAPCFRPlusV2:
    case Algorithm::kSAPCFRPlus:
    case Algorithm::kAPDCFRPlus:
      return true;
    default:
      return false;
  }
}

void Variant::validate() const {
  if (!(alpha_max > 0.0)) throw std::invalid_argument("alpha_max must be > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (forced_alpha && !(*forced_alpha >= 0.0)) {
    throw std::invalid_argument("forced alpha must be >= 0");
  }
}

Variant parse_variant(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& [a, name] : kNames) {
    if (lower == name) return Variant::of(a);
  }
  std::string known;
  for (const auto& [a, name] : kNames) known += (known.empty() ? "" : ", ") + std::string(name);
  throw VariantParseError("unknown algorithm '" + std::string(text) + "' (expected one of " + known + ")");
}

double discount_weight(const Variant& variant, int t) {
  const double tb = std::pow(static_cast<double>(t), variant.beta);
  return variant.lambda * tb / (variant.kappa + tb);
}

double compute_alpha(const LocalRegretState& state, const Variant& variant) {
  if (variant.forced_alpha) return *variant.forced_alpha;
  switch (variant.algorithm) {
    case Algorithm::kSAPCFRPlus:
      return kSymmetricAlpha;
    case Algorithm::kAPCFRPlus:
    case Algorithm::kAPDCFRPlus:
      return gap_ratio_alpha(state.sum_pred_gap, state.sum_state_gap, variant.alpha_max);
    case Algorithm::kAPCFRPlusV2:
      return gap_ratio_alpha(state.max_pred_gap, state.max_state_gap, variant.alpha_max);
    default:
      return 0.0;
  }
}

void predict_strategy(const LocalRegretState& state, const Variant& variant, int t,
                      std::span<double> sigma) {
  const std::size_t n = state.num_actions();
  if (sigma.size() != n) throw std::invalid_argument("predict_strategy: output length mismatch");
  const auto& R = state.cumulative;
  if (!variant.is_predictive()) {
    std::copy(R.begin(), R.end(), sigma.begin());
    normalize_positive(sigma);
    return;
  }
  const double scale = 1.0 / (1.0 + compute_alpha(state, variant));
  const auto& prev = state.last_regret;
  if (variant.algorithm == Algorithm::kAPDCFRPlus) {
    const double w = discount_weight(variant, t);
    for (std::size_t a = 0; a < n; ++a) sigma[a] = w * R[a] + scale * prev[a];
  } else {
    for (std::size_t a = 0; a < n; ++a) sigma[a] = R[a] + scale * prev[a];
  }
  normalize_positive(sigma);
}

std::vector<double> predict_strategy(const LocalRegretState& state, const Variant& variant, int t) {
  std::vector<double> sigma(state.num_actions());
  predict_strategy(state, variant, t, sigma);
  return sigma;
}

ObservedStep observe_regret(LocalRegretState& state, std::span<const double> regret,
                            const Variant& variant, int t) {
  const std::size_t n = state.num_actions();
  if (regret.size() != n) {
    throw std::invalid_argument("observe_regret: expected " + std::to_string(n) +
                                " regrets, got " + std::to_string(regret.size()));
  }
  ObservedStep step;
  step.alpha = variant.is_predictive() ? compute_alpha(state, variant) : 0.0;

  double w = 1.0;
  if (variant.algorithm == Algorithm::kAPDCFRPlus) w = discount_weight(variant, t);
  double pos_discount = 1.0;
  double neg_discount = 1.0;
  if (variant.algorithm == Algorithm::kDCFR) {
    const double ta = std::pow(static_cast<double>(t), variant.dcfr_alpha);
    const double tb = std::pow(static_cast<double>(t), variant.dcfr_beta);
    pos_discount = ta / (ta + 1.0);
    neg_discount = tb / (tb + 1.0);
  }

  for (std::size_t a = 0; a < n; ++a) {
    const double old = state.cumulative[a];
    double next = old + w * regret[a];
    if (variant.algorithm == Algorithm::kDCFR) {
      next *= next > 0.0 ? pos_discount : neg_discount;
    } else if (variant.floors_regret()) {
      next = std::max(next, 0.0);
    }
    state.cumulative[a] = next;
    const double dR = next - old;
    const double dr = regret[a] - state.last_regret[a];
    step.state_gap += dR * dR;
    step.pred_gap += dr * dr;
    state.last_regret[a] = regret[a];
  }
  state.sum_pred_gap += step.pred_gap;
  state.sum_state_gap += step.state_gap;
  state.max_pred_gap = std::max(state.max_pred_gap, step.pred_gap);
  state.max_state_gap = std::max(state.max_state_gap, step.state_gap);
  ++state.updates;
  return step;
}

}  // namespace cfr_forge
