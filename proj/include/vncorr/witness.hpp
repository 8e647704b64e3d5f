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

#ifndef VNCORR_WITNESS_HPP
#define VNCORR_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "vncorr/measurement.hpp"
#include "vncorr/rng.hpp"
#include "vncorr/statekit.hpp"

namespace vncorr {

enum class WitnessTarget { kQ1, kQ2, kQ12, kDelta };

std::string_view to_string(WitnessTarget t);

struct WitnessConfig {
  long samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  WitnessTarget target = WitnessTarget::kQ12;
  std::optional<ProjectiveBasis> basis1;  // required unless target is kQ2
  std::optional<ProjectiveBasis> basis2;  // required unless target is kQ1
  unsigned workers = 0;

  void validate(const BipartiteDims& dims) const;
};

struct WitnessEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
  double f = 0.0;          // prefactor f(m, n)
  double inferred = 0.0;   // mean / f
  double reference = 0.0;  // fixed-measurement value the estimate should match
};

/// f(m, n) = (m^2 n - n) / (m^2 n^2 - 1).
double f_factor(int m, int n);

/// rho - Phi(rho) for the one- and two-sided targets, and
/// rho - Phi1(rho) - Phi2(rho) + Phi12(rho) for kDelta.
Matrix difference_operator(const DensityMatrix& rho, WitnessTarget target,
                           const std::optional<ProjectiveBasis>& basis1,
                           const std::optional<ProjectiveBasis>& basis2);

/// || tr_B (U X U^dagger) ||^2 for the difference operator X.
double witness_sample(const DensityMatrix& rho, const Matrix& difference, const Matrix& u);

/// Plain Monte Carlo over Haar unitaries on the joint space. Samples are
/// drawn in fixed-size chunks, each from its own substream, and reduced in
/// chunk order, so the result is bit-identical for any worker count.
WitnessEstimate estimate(const DensityMatrix& rho, const WitnessConfig& cfg);

}  // namespace vncorr

#endif  // VNCORR_WITNESS_HPP
