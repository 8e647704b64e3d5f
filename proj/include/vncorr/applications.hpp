// Copyright 2026 The vncorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VNCORR_APPLICATIONS_HPP
#define VNCORR_APPLICATIONS_HPP

#include <string_view>
#include <vector>

#include "vncorr/correlator.hpp"
#include "vncorr/statekit.hpp"

namespace vncorr {

/// Weighted family of pure states sharing one set of dims.
class Ensemble {
 public:
  Ensemble(std::vector<PureStateVec> states, std::vector<double> probabilities);

  const std::vector<PureStateVec>& states() const { return states_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  const BipartiteDims& dims() const { return states_.front().dims(); }

 private:
  std::vector<PureStateVec> states_;
  std::vector<double> probabilities_;
};

enum class Verdict { kConditionSatisfied, kNotLocallyDistinguishable, kPreconditionFailed };

std::string_view to_string(Verdict v);

struct Preconditions {
  bool orthogonal = false;
  bool all_product = false;
};

struct ScreenVerdict {
  bool orthogonal = false;
  bool all_product = false;
  double delta_value = 0.0;  // only meaningful when preconditions hold
  Verdict verdict = Verdict::kPreconditionFailed;
};

inline constexpr double kScreenThreshold = 1e-5;

/// sum_i p_i |psi_i><psi_i|.
DensityMatrix ensemble_density(const Ensemble& e);

Preconditions screen_preconditions(const Ensemble& e);

/// Necessary-condition screen for exact LOCC discrimination of two-qubit
/// separable orthogonal ensembles: a joint correlation delta above
/// `threshold` rules discrimination out. delta <= threshold proves nothing.
ScreenVerdict locc_screen(const Ensemble& e, const OptimizerConfig& cfg,
                          double threshold = kScreenThreshold);

}  // namespace vncorr

#endif  // VNCORR_APPLICATIONS_HPP
