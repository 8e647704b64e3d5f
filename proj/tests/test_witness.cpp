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
#include "vncorr/correlator.hpp"
#include "vncorr/witness.hpp"

using namespace vncorr;

TEST_CASE("dimension factor") {
  CHECK(f_factor(2, 2) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(f_factor(2, 3) == doctest::Approx(9.0 / 35.0).epsilon(1e-15));
  CHECK(f_factor(3, 3) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("single witness sample") {
  const DensityMatrix bell(oracle::bell_projector(), {2, 2});
  const ProjectiveBasis z = ProjectiveBasis::computational(2);
  RngStream rng(89);
  CHECK(witness_sample(bell, Matrix::Zero(4, 4), haar_unitary(4, rng)) == 0.0);

  const Matrix x = difference_operator(bell, WitnessTarget::kQ12, z, z);
  const Matrix expected = oracle::bell_projector() - oracle::channel_both(oracle::bell_projector(), z.vectors(), z.vectors());
  CHECK((x - expected).norm() < 1e-15);
  const Matrix u = Matrix::Identity(4, 4);
  CHECK(std::abs(witness_sample(bell, x, u) - oracle::hs_sq(oracle::trace_second(expected, 2, 2))) < 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho(random_density(6, rng), {2, 3});
    const Matrix d = difference_operator(rho, WitnessTarget::kDelta, ProjectiveBasis(haar_unitary(2, rng)),
                                         ProjectiveBasis(haar_unitary(3, rng)));
    const Matrix v = haar_unitary(6, rng);
    const double s = witness_sample(rho, d, v);
    CHECK(s >= 0.0);
    CHECK(std::abs(s - oracle::hs_sq(oracle::trace_second(v * d * v.adjoint(), 2, 3))) < 1e-14);
  }
  CHECK_THROWS_AS(witness_sample(bell, x, Matrix::Identity(3, 3)), InvalidInput);
}

TEST_CASE("monte carlo estimates") {
  const DensityMatrix bell(oracle::bell_projector(), {2, 2});
  WitnessConfig cfg;
  cfg.samples = 10000;
  cfg.basis1 = ProjectiveBasis::computational(2);
  cfg.basis2 = ProjectiveBasis::computational(2);
  const WitnessEstimate est = estimate(bell, cfg);
  CHECK(est.f == doctest::Approx(0.4));
  CHECK(est.reference == doctest::Approx(0.5));
  CHECK(std::abs(est.inferred - 0.5) <= 3.0 * est.std_error / est.f);

  RngStream rng(97);
  StateParams params;
  const DensityMatrix cc = make_state(StateKind::kCC, {2, 2}, rng, params);
  const WitnessEstimate zero = estimate(cc, cfg);
  CHECK(zero.mean <= 3.0 * zero.std_error + 1e-15);

  const DensityMatrix rho(random_density(6, rng), {2, 3});
  WitnessConfig one_sided;
  one_sided.samples = 10000;
  one_sided.target = WitnessTarget::kQ1;
  one_sided.basis1 = ProjectiveBasis(haar_unitary(2, rng));
  const WitnessEstimate q1 = estimate(rho, one_sided);
  CHECK(std::abs(q1.inferred - q_fixed(rho, Which::kQ1, one_sided.basis1, std::nullopt)) <= 3.0 * q1.std_error / q1.f);

  one_sided.workers = 1;
  const WitnessEstimate serial = estimate(rho, one_sided);
  one_sided.workers = 3;
  const WitnessEstimate threaded = estimate(rho, one_sided);
  CHECK(serial.mean == threaded.mean);
  CHECK(serial.std_error == threaded.std_error);

  WitnessConfig bad;
  bad.samples = 0;
  CHECK_THROWS_AS(bad.validate({2, 2}), InvalidInput);
  bad.samples = 10;
  bad.target = WitnessTarget::kQ12;
  CHECK_THROWS_AS(bad.validate({2, 2}), InvalidInput);
}
