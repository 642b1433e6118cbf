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

// Local regret minimizers run independently at every infoset.
//
// All variants share one state layout. A minimizer alternates
// predict_strategy (produce sigma^t from the state) and observe_regret (fold
// in the instantaneous regret r^t). Predictive variants blend the previous
// regret into the prediction with step 1/(1+alpha):
//
//   Rhat = [w R + r_prev / (1 + alpha)]^+,   R <- [R + w r]^+
//
// where w = 1 except for APDCFR+, and alpha is 0 for PCFR+, 2 for SAPCFR+,
// and learned from the accumulated gaps for APCFR+, its V2 learner and
// APDCFR+.

#ifndef CFR_FORGE_REGRET_MINIMIZER_HPP_
#define CFR_FORGE_REGRET_MINIMIZER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfr_forge {

enum class Algorithm {
  kCFR,
  kCFRPlus,
  kDCFR,
  kPCFRPlus,
  kAPCFRPlus,
  kAPCFRPlusV2,
  kSAPCFRPlus,
  kAPDCFRPlus,
};

// "cfr", "cfr+", "dcfr", "pcfr+", "apcfr+", "apcfr+v2", "sapcfr+", "apdcfr+".
std::string_view to_string(Algorithm algorithm);

class VariantParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Variant {
  Algorithm algorithm = Algorithm::kPCFRPlus;
  double alpha_max = 5.0;
  // Regret discount of APDCFR+: w(t) = lambda t^beta / (kappa + t^beta).
  double lambda = 20.0;
  double kappa = 500.0;
  double beta = 1.5;
  // DCFR exponents for positive regrets, negative regrets and averaging.
  double dcfr_alpha = 1.5;
  double dcfr_beta = 0.5;
  double dcfr_gamma = 2.0;
  // Replaces the learned or fixed alpha of the predictive variants.
  std::optional<double> forced_alpha;

  // Defaults for `algorithm`; APDCFR+ uses alpha_max = 9.
  static Variant of(Algorithm algorithm);

  // Floors R at zero after every update.
  bool floors_regret() const;
  // Uses r_prev as a prediction.
  bool is_predictive() const;
  std::string name() const { return std::string(to_string(algorithm)); }

  // Throws std::invalid_argument for non-positive hyperparameters.
  void validate() const;
};

// Parses the names accepted by to_string(Algorithm), case-insensitively.
Variant parse_variant(std::string_view text);

// w(t) of APDCFR+.
double discount_weight(const Variant& variant, int t);

struct LocalRegretState {
  std::vector<double> cumulative;   // implicit accumulated regret R
  std::vector<double> last_regret;  // r_prev, zero before the first update
  double sum_pred_gap = 0.0;        // sum of ||r^t - r^{t-1}||^2
  double sum_state_gap = 0.0;       // sum of ||R^{t+1} - R^t||^2
  double max_pred_gap = 0.0;
  double max_state_gap = 0.0;
  std::int64_t updates = 0;

  LocalRegretState() = default;
  explicit LocalRegretState(int num_actions)
      : cumulative(static_cast<std::size_t>(num_actions), 0.0),
        last_regret(static_cast<std::size_t>(num_actions), 0.0) {}

  std::size_t num_actions() const { return cumulative.size(); }
};

// Alpha that the next prediction will use. Always in [0, alpha_max] for the
// learned variants. A zero state gap yields 0 when the prediction gap is also
// zero and alpha_max otherwise.
double compute_alpha(const LocalRegretState& state, const Variant& variant);

// Writes sigma^t into `sigma` (length num_actions). `t` is the global
// iteration, starting at 1. Uniform when the regrets to normalize are all 0.
void predict_strategy(const LocalRegretState& state, const Variant& variant, int t,
                      std::span<double> sigma);
std::vector<double> predict_strategy(const LocalRegretState& state, const Variant& variant, int t);

struct ObservedStep {
  double alpha = 0.0;      // alpha that produced this iteration's prediction
  double pred_gap = 0.0;   // ||r^t - r^{t-1}||^2
  double state_gap = 0.0;  // ||R^{t+1} - R^t||^2
};

// Folds r^t into the state. Throws std::invalid_argument on a length
// mismatch.
ObservedStep observe_regret(LocalRegretState& state, std::span<const double> regret,
                            const Variant& variant, int t);

}  // namespace cfr_forge

#endif  // CFR_FORGE_REGRET_MINIMIZER_HPP_
