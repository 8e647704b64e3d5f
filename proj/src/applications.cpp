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

#include "vncorr/applications.hpp"

#include <cmath>
#include <string>

namespace vncorr {

Ensemble::Ensemble(std::vector<PureStateVec> states, std::vector<double> probabilities)
    : states_(std::move(states)), probabilities_(std::move(probabilities)) {
  if (states_.empty()) throw InvalidInput("ensemble needs at least one state");
  if (states_.size() != probabilities_.size()) {
    throw InvalidInput("ensemble has " + std::to_string(states_.size()) + " states but " +
                       std::to_string(probabilities_.size()) + " probabilities");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0)) throw InvalidInput("ensemble probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > kTolerances.probability) {
    throw InvalidInput("ensemble probabilities must sum to 1");
  }
  for (const auto& s : states_) {
    if (!(s.dims() == states_.front().dims())) throw InvalidInput("ensemble states have mixed dims");
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kConditionSatisfied:
      return "condition_satisfied";
    case Verdict::kNotLocallyDistinguishable:
      return "not_locally_distinguishable";
    case Verdict::kPreconditionFailed:
      break;
  }
  return "precondition_failed";
}

DensityMatrix ensemble_density(const Ensemble& e) {
  const int d = e.dims().total();
  Matrix rho = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < e.states().size(); ++i) {
    const Vector& v = e.states()[i].amplitudes();
    rho += e.probabilities()[i] * (v * v.adjoint());
  }
  return DensityMatrix((rho + rho.adjoint()) / 2.0, e.dims());
}

Preconditions screen_preconditions(const Ensemble& e) {
  constexpr double kTol = 1e-10;
  Preconditions out{true, true};
  const auto& states = e.states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (std::abs(states[i].amplitudes().dot(states[j].amplitudes())) > kTol) out.orthogonal = false;
    }
    const RealVector lambda = schmidt(states[i]).coefficients;
    if (lambda.size() > 1 && lambda(1) > kTol) out.all_product = false;
  }
  return out;
}

ScreenVerdict locc_screen(const Ensemble& e, const OptimizerConfig& cfg, double threshold) {
  if (e.dims().m != 2 || e.dims().n != 2) {
    throw InvalidInput("the distinguishability screen applies to two-qubit ensembles only, got " +
                       std::to_string(e.dims().m) + "x" + std::to_string(e.dims().n));
  }
  const Preconditions pre = screen_preconditions(e);
  ScreenVerdict out;
  out.orthogonal = pre.orthogonal;
  out.all_product = pre.all_product;
  if (!pre.orthogonal || !pre.all_product) {
    out.verdict = Verdict::kPreconditionFailed;
    return out;
  }
  out.delta_value = compute_report(ensemble_density(e), cfg).delta;
  out.verdict = out.delta_value > threshold ? Verdict::kNotLocallyDistinguishable
                                            : Verdict::kConditionSatisfied;
  return out;
}

}  // namespace vncorr
