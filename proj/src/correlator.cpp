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

#include "vncorr/correlator.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "vncorr/generators.hpp"
#include "vncorr/nelder_mead.hpp"
#include "vncorr/parallel.hpp"

namespace vncorr {

namespace {

constexpr int kMaxRounds = 12;
constexpr int kMaxSweeps = 40;
// Tiny negative distances from cancellation are rounded to zero; anything
// below this is a bug, not noise.
constexpr double kNegativeSlack = 1e-9;

double clamp_distance(double value) {
  if (value >= 0.0) return value;
  if (value >= -kNegativeSlack) return 0.0;
  throw std::runtime_error("negative squared distance " + std::to_string(value));
}

struct LocalRun {
  Matrix u1;
  Matrix u2;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Which sides are dephased, and which of those have free bases.
struct Sides {
  bool measure1 = false;
  bool measure2 = false;
  bool vary1 = false;
  bool vary2 = false;
};

// Minimizes ||rho - Phi(rho)||^2 over the free bases. Coordinates are a local
// chart around the current bases, U = U0 exp(i H(theta)) with H traceless;
// the chart is re-centered after every simplex run until a run stops
// improving.
LocalRun optimize_local(const Matrix& rho, const BipartiteDims& dims, double purity_rho,
                        Sides sides, Matrix u1, Matrix u2, double initial_step,
                        const OptimizerConfig& cfg) {
  const GeneratorBasis& gen1 = generator_basis(dims.m);
  const GeneratorBasis& gen2 = generator_basis(dims.n);
  const Eigen::Index k1 = sides.vary1 ? gen1.size() - 1 : 0;
  const Eigen::Index k2 = sides.vary2 ? gen2.size() - 1 : 0;

  auto rotate = [](const Matrix& base, const GeneratorBasis& gen, const double* theta) {
    const int d = gen.dimension();
    Matrix h = Matrix::Zero(d, d);
    for (int k = 1; k < gen.size(); ++k) h += theta[k - 1] * gen[k];
    return Matrix(base * unitary_exp(h));
  };
  auto distance = [&](const Matrix& a, const Matrix& b) {
    return purity_rho - dephased_purity(rho, dims, sides.measure1 ? &a : nullptr,
                                        sides.measure2 ? &b : nullptr);
  };

  LocalRun run;
  run.value = distance(u1, u2);
  run.evaluations = 1;
  double step = initial_step;
  for (int round = 0; round < kMaxRounds; ++round) {
    const Matrix base1 = u1;
    const Matrix base2 = u2;
    auto chart = [&](const RealVector& theta, Matrix& a, Matrix& b) {
      a = sides.vary1 ? rotate(base1, gen1, theta.data()) : base1;
      b = sides.vary2 ? rotate(base2, gen2, theta.data() + k1) : base2;
    };
    NelderMeadOptions opts;
    opts.max_evaluations = cfg.max_iterations;
    opts.f_tolerance = cfg.objective_tolerance;
    opts.x_tolerance = cfg.parameter_tolerance;
    opts.initial_step = step;
    Matrix a, b;
    const NelderMeadResult nm = nelder_mead(
        [&](const RealVector& theta) {
          chart(theta, a, b);
          return distance(a, b);
        },
        RealVector::Zero(k1 + k2), opts);
    run.evaluations += nm.evaluations;
    run.converged = nm.converged;
    const double improvement = run.value - nm.value;
    if (nm.value < run.value) {
      chart(nm.x, u1, u2);
      run.value = nm.value;
    }
    if (improvement < cfg.objective_tolerance && nm.converged) break;
    step = 0.1;
  }
  run.u1 = std::move(u1);
  run.u2 = std::move(u2);
  return run;
}

LocalRun run_start(const DensityMatrix& rho, Which which, double purity_rho, Matrix u1,
                   Matrix u2, const OptimizerConfig& cfg) {
  const BipartiteDims& dims = rho.dims();
  if (which == Which::kQ1) {
    return optimize_local(rho.matrix(), dims, purity_rho, {true, false, true, false},
                          std::move(u1), std::move(u2), 0.5, cfg);
  }
  if (which == Which::kQ2) {
    return optimize_local(rho.matrix(), dims, purity_rho, {false, true, false, true},
                          std::move(u1), std::move(u2), 0.5, cfg);
  }

  if (cfg.joint == JointStrategy::kSimultaneous) {
    return optimize_local(rho.matrix(), dims, purity_rho, {true, true, true, true},
                          std::move(u1), std::move(u2), 0.5, cfg);
  }
  // Phi1 and Phi2 commute, so the joint problem can alternate between sides.
  LocalRun out;
  double previous = std::numeric_limits<double>::infinity();
  double step = 0.5;
  bool sweeps_converged = false;
  bool sides_converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    LocalRun a = optimize_local(rho.matrix(), dims, purity_rho, {true, true, true, false},
                                std::move(u1), std::move(u2), step, cfg);
    LocalRun b = optimize_local(rho.matrix(), dims, purity_rho, {true, true, false, true},
                                std::move(a.u1), std::move(a.u2), step, cfg);
    u1 = std::move(b.u1);
    u2 = std::move(b.u2);
    out.evaluations += a.evaluations + b.evaluations;
    sides_converged = a.converged && b.converged;
    const double current = b.value;
    if (previous - current < cfg.objective_tolerance) {
      previous = std::min(previous, current);
      sweeps_converged = true;
      break;
    }
    previous = current;
    step = 0.1;
  }
  out.value = previous;
  out.u1 = std::move(u1);
  out.u2 = std::move(u2);
  out.converged = sweeps_converged && sides_converged;
  return out;
}

std::uint64_t stream_tag(Which which) {
  switch (which) {
    case Which::kQ1:
      return 1ULL << 32;
    case Which::kQ2:
      return 2ULL << 32;
    case Which::kQ12:
      break;
  }
  return 3ULL << 32;
}

void require_bases(Which which, const std::optional<ProjectiveBasis>& b1,
                   const std::optional<ProjectiveBasis>& b2) {
  if (which != Which::kQ2 && !b1) throw InvalidInput("basis1 is required for " + std::string(to_string(which)));
  if (which != Which::kQ1 && !b2) throw InvalidInput("basis2 is required for " + std::string(to_string(which)));
}

}  // namespace

std::string_view to_string(Which w) {
  switch (w) {
    case Which::kQ1:
      return "q1";
    case Which::kQ2:
      return "q2";
    case Which::kQ12:
      break;
  }
  return "q12";
}

void OptimizerConfig::validate() const {
  if (starts < 0) throw InvalidInput("starts must be >= 1 (or 0 for the default)");
  if (max_iterations < 1) throw InvalidInput("max_iterations must be >= 1");
  if (!(objective_tolerance > 0.0) || !(parameter_tolerance > 0.0)) {
    throw InvalidInput("optimizer tolerances must be > 0");
  }
  if (grid_resolution < 2) throw InvalidInput("grid_resolution must be >= 2");
}

int effective_starts(const OptimizerConfig& cfg, const BipartiteDims& dims, Which which) {
  if (cfg.starts > 0) return cfg.starts;
  int largest = 0;
  if (which != Which::kQ2) largest = std::max(largest, dims.m);
  if (which != Which::kQ1) largest = std::max(largest, dims.n);
  return largest <= 3 ? 16 : 48;
}

double hs_distance_sq(const Matrix& a, const Matrix& b) { return (a - b).squaredNorm(); }

double q_fixed(const DensityMatrix& rho, Which which, const std::optional<ProjectiveBasis>& basis1,
               const std::optional<ProjectiveBasis>& basis2) {
  require_bases(which, basis1, basis2);
  const Matrix* u1 = nullptr;
  const Matrix* u2 = nullptr;
  if (which != Which::kQ2) {
    if (basis1->dim() != rho.dims().m) throw InvalidInput("basis1 dimension does not match m");
    u1 = &basis1->vectors();
  }
  if (which != Which::kQ1) {
    if (basis2->dim() != rho.dims().n) throw InvalidInput("basis2 dimension does not match n");
    u2 = &basis2->vectors();
  }
  return clamp_distance(purity(rho) - dephased_purity(rho.matrix(), rho.dims(), u1, u2));
}

double delta_fixed(const DensityMatrix& rho, const ProjectiveBasis& basis1,
                   const ProjectiveBasis& basis2) {
  return q_fixed(rho, Which::kQ1, basis1, std::nullopt) +
         q_fixed(rho, Which::kQ2, std::nullopt, basis2) -
         q_fixed(rho, Which::kQ12, basis1, basis2);
}

MinimizeResult minimize_q(const DensityMatrix& rho, Which which, const OptimizerConfig& cfg,
                          const std::optional<ProjectiveBasis>& seed_basis1,
                          const std::optional<ProjectiveBasis>& seed_basis2) {
  cfg.validate();
  if (cfg.method == OptimizerMethod::kQubitGrid) {
    return brute_force_qubit(rho, which, cfg.grid_resolution);
  }
  const BipartiteDims& dims = rho.dims();
  const int m = dims.m;
  const int n = dims.n;
  const double purity_rho = purity(rho);
  const int random_starts = effective_starts(cfg, dims, which);
  const bool seeded = (which != Which::kQ2 && seed_basis1) || (which != Which::kQ1 && seed_basis2);
  const int total = random_starts + (seeded ? 1 : 0);

  const auto results =
      parallel_map(static_cast<std::size_t>(total), cfg.workers, [&](std::size_t k) {
        RngStream rng = RngStream::substream(cfg.seed, stream_tag(which) + k);
        Matrix u1 = haar_unitary(m, rng);
        Matrix u2 = haar_unitary(n, rng);
        if (static_cast<int>(k) == random_starts) {
          if (seed_basis1) u1 = seed_basis1->vectors();
          if (seed_basis2) u2 = seed_basis2->vectors();
        }
        return run_start(rho, which, purity_rho, std::move(u1), std::move(u2), cfg);
      });

  std::size_t best = 0;
  long evaluations = 0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    evaluations += results[k].evaluations;
    if (results[k].value < results[best].value) best = k;
  }
  const LocalRun& winner = results[best];
  MinimizeResult out;
  out.value = clamp_distance(winner.value);
  out.converged = winner.converged;
  out.evaluations = evaluations;
  if (which != Which::kQ2) out.basis1 = ProjectiveBasis(winner.u1);
  if (which != Which::kQ1) out.basis2 = ProjectiveBasis(winner.u2);
  return out;
}

CorrelationReport compute_report(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  MinimizeResult r1 = minimize_q(rho, Which::kQ1, cfg);
  MinimizeResult r2 = minimize_q(rho, Which::kQ2, cfg);
  const MinimizeResult r12 = minimize_q(rho, Which::kQ12, cfg, r1.basis1, r2.basis2);

  // The joint argmin also bounds each one-sided problem; keep whichever is
  // lower.
  const double q1_at_joint = q_fixed(rho, Which::kQ1, r12.basis1, std::nullopt);
  if (q1_at_joint < r1.value) {
    r1.value = q1_at_joint;
    r1.basis1 = r12.basis1;
  }
  const double q2_at_joint = q_fixed(rho, Which::kQ2, std::nullopt, r12.basis2);
  if (q2_at_joint < r2.value) {
    r2.value = q2_at_joint;
    r2.basis2 = r12.basis2;
  }

  CorrelationReport report{
      .q1 = r1.value,
      .q2 = r2.value,
      .q12 = r12.value,
      .delta = r1.value + r2.value - r12.value,
      .basis1 = *r12.basis1,
      .basis2 = *r12.basis2,
      .q1_basis = *r1.basis1,
      .q2_basis = *r2.basis2,
      .converged = r1.converged && r2.converged && r12.converged,
      .evaluations = r1.evaluations + r2.evaluations + r12.evaluations,
  };
  return report;
}

bool cq_distance_bound_check(const DensityMatrix& rho, const DensityMatrix& sigma, double q1) {
  if (!(rho.dims() == sigma.dims())) throw InvalidInput("rho and sigma have different dims");
  if (!is_cq(sigma)) throw InvalidInput("sigma is not a classical-quantum state");
  return hs_distance_sq(rho.matrix(), sigma.matrix()) >= q1 - 1e-8;
}

}  // namespace vncorr
