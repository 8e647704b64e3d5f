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

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "vncorr/closedform.hpp"
#include "vncorr/correlator.hpp"
#include "vncorr/statekit.hpp"

using namespace vncorr;

namespace {

OptimizerConfig quick_config(std::uint64_t seed = kDefaultSeed) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.starts = 8;
  return cfg;
}

DensityMatrix bell() { return DensityMatrix(oracle::bell_projector(), {2, 2}); }

}  // namespace

TEST_CASE("optimizer configuration validation") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.starts = -1;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = OptimizerConfig{};
  cfg.objective_tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = OptimizerConfig{};
  CHECK(effective_starts(cfg, {2, 3}, Which::kQ12) == 16);
  CHECK(effective_starts(cfg, {2, 4}, Which::kQ1) == 16);
  CHECK(effective_starts(cfg, {2, 4}, Which::kQ2) == 48);
}

TEST_CASE("fixed-measurement correlations") {
  const ProjectiveBasis z = ProjectiveBasis::computational(2);
  CHECK(q_fixed(bell(), Which::kQ12, z, z) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q_fixed(bell(), Which::kQ1, z, std::nullopt) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(delta_fixed(bell(), z, z) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(q_fixed(bell(), Which::kQ1, std::nullopt, z), InvalidInput);
  CHECK_THROWS_AS(q_fixed(bell(), Which::kQ12, z, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(delta_fixed(bell(), ProjectiveBasis::computational(3), z), InvalidInput);

  RngStream rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 2, n = 2 + (trial / 2) % 2;
    const DensityMatrix rho(random_density(m * n, rng), {m, n});
    const ProjectiveBasis b1(haar_unitary(m, rng)), b2(haar_unitary(n, rng));
    const Matrix p1 = oracle::channel_first(rho.matrix(), b1.vectors(), n);
    const Matrix p2 = oracle::channel_second(rho.matrix(), b2.vectors(), m);
    const Matrix p12 = oracle::channel_both(rho.matrix(), b1.vectors(), b2.vectors());
    CHECK(std::abs(q_fixed(rho, Which::kQ1, b1, std::nullopt) - oracle::hs_sq(rho.matrix() - p1)) <= 1e-12);
    CHECK(std::abs(q_fixed(rho, Which::kQ2, std::nullopt, b2) - oracle::hs_sq(rho.matrix() - p2)) <= 1e-12);
    CHECK(std::abs(q_fixed(rho, Which::kQ12, b1, b2) - oracle::hs_sq(rho.matrix() - p12)) <= 1e-12);
    const double d = delta_fixed(rho, b1, b2);
    CHECK(d >= -1e-12);
    CHECK(std::abs(d - oracle::hs_sq(rho.matrix() - p1 - p2 + p12)) <= 1e-12);
  }

  StateParams params;
  params.basis1 = haar_unitary(2, rng);
  const DensityMatrix cq = make_state(StateKind::kCQ, {2, 2}, rng, params);
  const ProjectiveBasis own(*params.basis1), other(haar_unitary(2, rng));
  CHECK(std::abs(q_fixed(cq, Which::kQ1, own, std::nullopt)) < 1e-14);
  CHECK(std::abs(delta_fixed(cq, own, other)) < 1e-12);

  const DensityMatrix prod(tensor_product(random_density(2, rng), random_density(3, rng)), {2, 3});
  const ProjectiveBasis pb1(haar_unitary(2, rng)), pb2(haar_unitary(3, rng));
  const Matrix r = prod.matrix();
  const Matrix residual = r - oracle::channel_first(r, pb1.vectors(), 3) - oracle::channel_second(r, pb2.vectors(), 2) +
                          oracle::channel_both(r, pb1.vectors(), pb2.vectors());
  CHECK(std::abs(delta_fixed(prod, pb1, pb2) - oracle::hs_sq(residual)) < 1e-12);
}

TEST_CASE("minimization on known values") {
  const OptimizerConfig cfg = quick_config();
  CHECK(minimize_q(bell(), Which::kQ1, cfg).value == doctest::Approx(0.5).epsilon(1e-6));

  RngStream rng(47);
  StateParams params;
  params.basis1 = haar_unitary(3, rng);
  params.basis2 = haar_unitary(2, rng);
  CHECK(minimize_q(make_state(StateKind::kCQ, {3, 2}, rng, params), Which::kQ1, cfg).value <= 1e-8);
  CHECK(minimize_q(make_state(StateKind::kQC, {3, 2}, rng, params), Which::kQ2, cfg).value <= 1e-8);
  CHECK(minimize_q(make_state(StateKind::kCC, {3, 2}, rng, params), Which::kQ12, cfg).value <= 1e-7);

  const CorrelationReport mixed = compute_report(DensityMatrix(Matrix::Identity(6, 6) / 6.0, {2, 3}), cfg);
  for (double v : {mixed.q1, mixed.q2, mixed.q12, mixed.delta}) CHECK(std::abs(v) <= 1e-8);

  const PureStateVec psi = random_pure({2, 3}, rng);
  const CorrelationReport pure = compute_report(psi.projector(), cfg);
  const double expected = pure_state_correlation(schmidt(psi).coefficients);
  for (double v : {pure.q1, pure.q2, pure.q12, pure.delta}) CHECK(std::abs(v - expected) <= 1e-6);
}

TEST_CASE("ordering chain and local-unitary invariance") {
  const OptimizerConfig cfg = quick_config(5);
  RngStream rng(53);
  for (int trial = 0; trial < 4; ++trial) {
    const BipartiteDims dims{2, 2 + trial % 2};
    const DensityMatrix rho(random_density(dims.total(), rng), dims);
    const CorrelationReport r = compute_report(rho, cfg);
    CHECK(r.delta >= -1e-6);
    CHECK(r.delta <= std::min(r.q1, r.q2) + 1e-6);
    CHECK(std::max(r.q1, r.q2) <= r.q12 + 1e-6);
    CHECK(r.q12 < 1.0);
    CHECK(r.delta == r.q1 + r.q2 - r.q12);

    const Matrix u = tensor_product(haar_unitary(dims.m, rng), haar_unitary(dims.n, rng));
    const CorrelationReport ru = compute_report(DensityMatrix(u * rho.matrix() * u.adjoint(), dims), cfg);
    CHECK(std::abs(ru.q1 - r.q1) <= 1e-5);
    CHECK(std::abs(ru.q2 - r.q2) <= 1e-5);
    CHECK(std::abs(ru.q12 - r.q12) <= 1e-5);
    CHECK(std::abs(ru.delta - r.delta) <= 1e-5);
  }
}

TEST_CASE("qubit grid oracle") {
  CHECK(brute_force_qubit(bell(), Which::kQ1, 50).value == doctest::Approx(0.5).epsilon(1e-3));
  const DensityMatrix werner = make_family({Family::kWerner, 2, 0.0});
  CHECK(std::abs(brute_force_qubit(werner, Which::kQ1, 50).value - 1.0 / 18.0) <= 1e-4);

  RngStream rng(59);
  StateParams params;
  params.basis1 = haar_unitary(2, rng);
  CHECK(brute_force_qubit(make_state(StateKind::kCQ, {2, 2}, rng, params), Which::kQ1, 50).value <= 1e-6);
  CHECK_THROWS_AS(brute_force_qubit(DensityMatrix(Matrix::Identity(6, 6) / 6.0, {2, 3}), Which::kQ2, 50),
                  InvalidInput);

  const OptimizerConfig cfg = quick_config();
  for (int trial = 0; trial < 3; ++trial) {
    const DensityMatrix rho(random_density(4, rng), {2, 2});
    for (Which w : {Which::kQ1, Which::kQ2, Which::kQ12}) {
      CHECK(std::abs(minimize_q(rho, w, cfg).value - brute_force_qubit(rho, w, 50).value) <= 1e-4);
    }
  }
}

TEST_CASE("distance to classical-quantum states bounds q1") {
  const OptimizerConfig cfg = quick_config();
  RngStream rng(61);
  const DensityMatrix rho(random_density(6, rng), {2, 3});
  const MinimizeResult q1 = minimize_q(rho, Which::kQ1, cfg);
  REQUIRE(q1.basis1.has_value());
  const DensityMatrix witness = apply_phi1(rho, *q1.basis1);
  CHECK(std::abs(hs_distance_sq(rho.matrix(), witness.matrix()) - q1.value) < 1e-12);
  CHECK(cq_distance_bound_check(rho, witness, q1.value));
  CHECK(cq_distance_bound_check(rho, DensityMatrix(Matrix::Identity(6, 6) / 6.0, {2, 3}), q1.value));
  for (int s = 0; s < 100; ++s) {
    const DensityMatrix sigma = make_state(StateKind::kCQ, {2, 3}, rng);
    CHECK(cq_distance_bound_check(rho, sigma, q1.value));
  }
  CHECK_THROWS_AS(cq_distance_bound_check(rho, rho, q1.value), InvalidInput);
}

TEST_CASE("alternating and simultaneous joint searches agree") {
  RngStream rng(67);
  const DensityMatrix rho(random_density(4, rng), {2, 2});
  OptimizerConfig cfg = quick_config();
  const double simultaneous = minimize_q(rho, Which::kQ12, cfg).value;
  cfg.joint = JointStrategy::kAlternating;
  const double alternating = minimize_q(rho, Which::kQ12, cfg).value;
  CHECK(std::abs(simultaneous - alternating) <= 1e-6);
}

TEST_CASE("results do not depend on the worker count") {
  RngStream rng(71);
  const DensityMatrix rho(random_density(6, rng), {2, 3});
  OptimizerConfig cfg = quick_config(99);
  cfg.workers = 1;
  const CorrelationReport one = compute_report(rho, cfg);
  cfg.workers = 4;
  const CorrelationReport four = compute_report(rho, cfg);
  CHECK(one.q1 == four.q1);
  CHECK(one.q2 == four.q2);
  CHECK(one.q12 == four.q12);
  CHECK(one.evaluations == four.evaluations);
}
