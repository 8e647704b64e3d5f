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

#ifndef VNCORR_CORRELATOR_HPP
#define VNCORR_CORRELATOR_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "vncorr/measurement.hpp"
#include "vncorr/rng.hpp"
#include "vncorr/statekit.hpp"

namespace vncorr {

/// Which measurement-induced distance: one-sided on the first (Q1) or second
/// (Q2) subsystem, or two-sided (Q12).
enum class Which { kQ1, kQ2, kQ12 };

std::string_view to_string(Which w);

enum class OptimizerMethod { kMultistartLocal, kQubitGrid };

/// How Q12 searches both bases: one simplex over both parameter blocks, or
/// alternating one-sided runs until the objective stops moving.
enum class JointStrategy { kSimultaneous, kAlternating };

struct OptimizerConfig {
  /// Random restarts; 0 picks 16 when every optimized side has d <= 3 and 48
  /// otherwise.
  int starts = 0;
  /// Evaluation budget of a single simplex run.
  int max_iterations = 4000;
  double objective_tolerance = 1e-10;
  double parameter_tolerance = 1e-5;
  std::uint64_t seed = kDefaultSeed;
  OptimizerMethod method = OptimizerMethod::kMultistartLocal;
  JointStrategy joint = JointStrategy::kSimultaneous;
  /// Threads used for restarts; 0 means hardware concurrency. Results do not
  /// depend on this value.
  unsigned workers = 0;
  /// Grid resolution for kQubitGrid.
  int grid_resolution = 50;

  void validate() const;
};

int effective_starts(const OptimizerConfig& cfg, const BipartiteDims& dims, Which which);

struct MinimizeResult {
  double value = 0.0;
  std::optional<ProjectiveBasis> basis1;  // set for kQ1, kQ12
  std::optional<ProjectiveBasis> basis2;  // set for kQ2, kQ12
  bool converged = false;
  long evaluations = 0;
};

struct CorrelationReport {
  double q1 = 0.0;
  double q2 = 0.0;
  double q12 = 0.0;
  double delta = 0.0;  // q1 + q2 - q12 as stored
  ProjectiveBasis basis1;  // Q12 argmin, first side
  ProjectiveBasis basis2;  // Q12 argmin, second side
  ProjectiveBasis q1_basis;
  ProjectiveBasis q2_basis;
  bool converged = false;
  long evaluations = 0;
};

/// ||rho - Phi(rho)||^2 = tr rho^2 - tr Phi(rho)^2 for fixed bases.
double q_fixed(const DensityMatrix& rho, Which which, const std::optional<ProjectiveBasis>& basis1,
               const std::optional<ProjectiveBasis>& basis2);

/// Fixed-measurement joint quantity Q1(Phi1) + Q2(Phi2) - Q12(Phi1, Phi2).
double delta_fixed(const DensityMatrix& rho, const ProjectiveBasis& basis1,
                   const ProjectiveBasis& basis2);

/// Minimum of q_fixed over rank-1 bases of the optimized side(s). Extra
/// starting bases (e.g. argmins of the one-sided problems) are tried in
/// addition to the random restarts.
MinimizeResult minimize_q(const DensityMatrix& rho, Which which, const OptimizerConfig& cfg,
                          const std::optional<ProjectiveBasis>& seed_basis1 = std::nullopt,
                          const std::optional<ProjectiveBasis>& seed_basis2 = std::nullopt);

CorrelationReport compute_report(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// Exhaustive direction grid over qubit measurements followed by a compass
/// search from the best few grid points. Every optimized side must be a qubit.
MinimizeResult brute_force_qubit(const DensityMatrix& rho, Which which, int resolution);

/// False if sigma, a certified C-Q state, lies closer to rho than q1 allows.
bool cq_distance_bound_check(const DensityMatrix& rho, const DensityMatrix& sigma, double q1);

/// Squared Hilbert-Schmidt distance.
double hs_distance_sq(const Matrix& a, const Matrix& b);

}  // namespace vncorr

#endif  // VNCORR_CORRELATOR_HPP
