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
#include "vncorr/statekit.hpp"

using namespace vncorr;

namespace {

Matrix random_qubit_state(RngStream& rng) { return random_density(2, rng); }

}  // namespace

TEST_CASE("tensor product") {
  CHECK(tensor_product(Matrix::Identity(2, 2), Matrix::Identity(2, 2)).isApprox(Matrix::Identity(4, 4)));

  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK((tensor_product(a, b) - expected).norm() == 0.0);

  RngStream rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix r = random_qubit_state(rng), s = random_density(3, rng);
    CHECK((tensor_product(r, s) - oracle::kron(r, s)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("partial trace") {
  const DensityMatrix bell(oracle::bell_projector(), {2, 2});
  CHECK(partial_trace(bell, Subsystem::kFirst).isApprox(Matrix::Identity(2, 2) / 2.0));
  CHECK(partial_trace(bell, Subsystem::kSecond).isApprox(Matrix::Identity(2, 2) / 2.0));

  RngStream rng(11);
  const Matrix r = random_density(2, rng), s = random_density(3, rng);
  const DensityMatrix prod(tensor_product(r, s), {2, 3});
  CHECK((partial_trace(prod, Subsystem::kFirst) - r).norm() < 1e-14);
  CHECK((partial_trace(prod, Subsystem::kSecond) - s).norm() < 1e-14);

  for (int trial = 0; trial < 5; ++trial) {
    const Matrix rho = random_density(6, rng);
    CHECK((partial_trace(rho, {2, 3}, Subsystem::kFirst) - oracle::trace_second(rho, 2, 3)).norm() < 1e-14);
    CHECK((partial_trace(rho, {2, 3}, Subsystem::kSecond) - oracle::trace_first(rho, 2, 3)).norm() < 1e-14);
  }

  CHECK_THROWS_AS(partial_trace(Matrix::Identity(5, 5), {2, 3}, Subsystem::kFirst), InvalidInput);
}

TEST_CASE("purity and the swap identity") {
  const DensityMatrix mixed(Matrix::Identity(4, 4) / 4.0, {2, 2});
  CHECK(purity(mixed) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(purity_via_swap(mixed) == doctest::Approx(0.25).epsilon(1e-14));
  const DensityMatrix bell(oracle::bell_projector(), {2, 2});
  CHECK(purity(bell) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity_via_swap(bell) == doctest::Approx(1.0).epsilon(1e-14));

  const DensityMatrix iso = make_family({Family::kIsotropic, 2, 0.5});
  CHECK(std::abs(purity(iso) - oracle::purity_eig(iso.matrix())) < 1e-12);

  RngStream rng(13);
  for (int m = 2; m <= 3; ++m) {
    for (int n = 2; n <= 3; ++n) {
      for (int trial = 0; trial < 12; ++trial) {
        const DensityMatrix rho(random_density(m * n, rng, 1 + trial % (m * n)), {m, n});
        CHECK(std::abs(purity_via_swap(rho) - purity(rho)) <= 1e-10);
        CHECK(std::abs(purity(rho) - oracle::purity_eig(rho.matrix())) <= 1e-10);
      }
    }
  }
}

TEST_CASE("schmidt decomposition") {
  const PureStateVec product(ket({2, 2}, 0, 0), {2, 2});
  const SchmidtDecomposition sp = schmidt(product);
  CHECK(sp.coefficients(0) == doctest::Approx(1.0));
  CHECK(std::abs(sp.coefficients(1)) < 1e-15);

  const PureStateVec bell((ket({2, 2}, 0, 0) + ket({2, 2}, 1, 1)) / std::sqrt(2.0), {2, 2});
  const SchmidtDecomposition sb = schmidt(bell);
  CHECK(sb.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(sb.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)));

  RngStream rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const PureStateVec psi = random_pure({3, 3}, rng);
    const SchmidtDecomposition sd = schmidt(psi);
    CHECK((sd.reconstruct() - psi.amplitudes()).norm() < 1e-12);
    const Matrix reduced = oracle::trace_second(psi.amplitudes() * psi.amplitudes().adjoint(), 3, 3);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(reduced);
    RealVector sq = sd.coefficients.array().square();
    std::sort(sq.data(), sq.data() + sq.size());
    CHECK((sq - eig.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
  }

  CHECK_THROWS_AS(PureStateVec(ket({2, 2}, 0, 0) * 1.001, {2, 2}), InvalidInput);
}

TEST_CASE("squared concurrence of pure states") {
  CHECK(std::abs(concurrence_sq_pure(PureStateVec(ket({2, 3}, 1, 2), {2, 3}))) < 1e-14);
  const PureStateVec bell((ket({2, 2}, 0, 0) + ket({2, 2}, 1, 1)) / std::sqrt(2.0), {2, 2});
  CHECK(concurrence_sq_pure(bell) == doctest::Approx(1.0).epsilon(1e-14));

  RngStream rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const PureStateVec psi = random_pure({2 + trial % 2, 3}, rng);
    CHECK(std::abs(concurrence_sq_pure(psi) - 2.0 * pure_state_correlation(schmidt(psi).coefficients)) < 1e-12);
  }
}

TEST_CASE("haar unitaries") {
  RngStream rng(23);
  const Matrix phase = haar_unitary(1, rng);
  CHECK(std::abs(std::abs(phase(0, 0)) - 1.0) < 1e-14);
  for (int d = 2; d <= 5; ++d) {
    const Matrix u = haar_unitary(d, rng);
    CHECK((u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-10);
  }

  const int samples = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double x = std::norm(haar_unitary(2, rng)(0, 0));
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum_sq / samples - mean * mean) / (samples - 1));
  CHECK(std::abs(mean - 0.5) <= 3.0 * se);
}

TEST_CASE("state construction") {
  RngStream rng(29);
  StateParams point;
  point.probabilities = {1.0, 0.0, 0.0, 0.0};
  const DensityMatrix cc = make_state(StateKind::kCC, {2, 2}, rng, point);
  CHECK((cc.matrix() - ket({2, 2}, 0, 0) * ket({2, 2}, 0, 0).adjoint()).norm() < 1e-15);

  StateParams uniform;
  uniform.probabilities = {0.5, 0.5};
  uniform.basis1 = haar_unitary(2, rng);
  const DensityMatrix cq = make_state(StateKind::kCQ, {2, 3}, rng, uniform);
  const Matrix fixed = oracle::channel_first(cq.matrix(), *uniform.basis1, 3);
  CHECK((fixed - cq.matrix()).norm() < 1e-12);

  const DensityMatrix mixed = make_state(StateKind::kRandomMixed, {2, 2}, rng);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(mixed.matrix());
  CHECK(eig.eigenvalues().minCoeff() >= -1e-12);
  CHECK(std::abs(mixed.matrix().trace().real() - 1.0) < 1e-12);

  for (auto kind : {StateKind::kQC, StateKind::kProduct, StateKind::kRandomPure}) {
    const DensityMatrix rho = make_state(kind, {3, 2}, rng);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
  }

  StateParams bad;
  bad.probabilities = {0.7, 0.7};
  CHECK_THROWS_AS(make_state(StateKind::kCQ, {2, 2}, rng, bad), InvalidInput);
  bad.probabilities = {1.5, -0.5};
  CHECK_THROWS_AS(make_state(StateKind::kCQ, {2, 2}, rng, bad), InvalidInput);
}

TEST_CASE("density matrix validation names the failed invariant") {
  auto invariant_of = [](const Matrix& m, BipartiteDims dims) -> std::string {
    try {
      DensityMatrix rho(m, dims);
    } catch (const ValidationError& e) {
      return e.invariant();
    }
    return "";
  };
  CHECK(invariant_of(Matrix::Identity(4, 4) * 0.225, {2, 2}) == "unit trace");
  Matrix nonherm = Matrix::Identity(4, 4) / 4.0;
  nonherm(0, 1) = 0.1;
  CHECK(invariant_of(nonherm, {2, 2}) == "hermitian");
  Matrix negative = Matrix::Zero(4, 4);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK(invariant_of(negative, {2, 2}) == "positive semidefinite");
  CHECK(invariant_of(Matrix::Identity(5, 5) / 5.0, {2, 2}) == "dimensions");
}
