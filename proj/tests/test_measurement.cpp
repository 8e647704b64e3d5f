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
#include "vncorr/generators.hpp"
#include "vncorr/measurement.hpp"
#include "vncorr/statekit.hpp"

using namespace vncorr;

namespace {

RealVector random_params(int d, RngStream& rng) {
  RealVector theta(d * d);
  for (int k = 0; k < d * d; ++k) theta(k) = 2.0 * rng.normal();
  return theta;
}

bool same_ray(const Vector& a, const Vector& b) { return std::abs(std::abs(a.dot(b)) - 1.0) < 1e-12; }

}  // namespace

TEST_CASE("generator basis is orthonormal") {
  for (int d = 2; d <= 4; ++d) {
    const GeneratorBasis& g = generator_basis(d);
    REQUIRE(g.size() == d * d);
    for (int i = 0; i < g.size(); ++i) {
      CHECK((g[i] - g[i].adjoint()).norm() < 1e-15);
      for (int j = 0; j < g.size(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs((g[i] * g[j]).trace() - expected) < 1e-14);
      }
    }
    RngStream rng(3);
    const Matrix h = random_density(d, rng);
    CHECK((g.combine(g.coordinates(h)) - h).norm() < 1e-13);
  }
}

TEST_CASE("basis from parameters") {
  for (int d = 2; d <= 3; ++d) {
    const ProjectiveBasis zero = basis_from_params(RealVector::Zero(d * d), d);
    CHECK((zero.vectors() - Matrix::Identity(d, d)).norm() < 1e-14);
  }

  RngStream rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 3;
    const RealVector theta = random_params(d, rng);
    const ProjectiveBasis b = basis_from_params(theta, d);
    Matrix total = Matrix::Zero(d, d);
    for (int u = 0; u < d; ++u) total += b.projector(u);
    CHECK((total - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-10);

    const Matrix h = generator_basis(d).combine(theta);
    const Matrix oracle_u = oracle::expm_taylor(Complex(0.0, 1.0) * h, 80);
    CHECK((b.vectors() - oracle_u).cwiseAbs().maxCoeff() < 1e-10);
  }

  // exp(i H) with H = pi/2 - pi (sx + sz) / (2 sqrt 2) is the Hadamard gate.
  RealVector hadamard(4);
  hadamard << M_PI / std::sqrt(2.0), -M_PI / 2.0, 0.0, -M_PI / 2.0;
  const Matrix u = oracle::expm_taylor(Complex(0.0, 1.0) * generator_basis(2).combine(hadamard));
  const ProjectiveBasis b = basis_from_params(hadamard, 2);
  CHECK((b.vectors() - u).cwiseAbs().maxCoeff() < 1e-12);
  Vector plus(2), minus(2);
  plus << 1.0, 1.0;
  minus << 1.0, -1.0;
  plus /= std::sqrt(2.0);
  minus /= std::sqrt(2.0);
  CHECK(same_ray(b.vector(0), plus));
  CHECK(same_ray(b.vector(1), minus));
  CHECK((ProjectiveBasis::fourier(2).vectors().cwiseAbs() - b.vectors().cwiseAbs()).norm() < 1e-12);
}

TEST_CASE("dephasing channels on the bell state") {
  const DensityMatrix bell(oracle::bell_projector(), {2, 2});
  const ProjectiveBasis z = ProjectiveBasis::computational(2);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  const DensityMatrix p1 = apply_phi1(bell, z);
  CHECK((p1.matrix() - expected).norm() < 1e-15);
  CHECK(purity(p1) == doctest::Approx(0.5));
  CHECK((apply_phi2(bell, z).matrix() - expected).norm() < 1e-15);
  CHECK((apply_phi12(bell, z, z).matrix() - expected).norm() < 1e-15);
}

TEST_CASE("dephasing channels agree with projector sums") {
  RngStream rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 2, n = 2 + (trial / 2) % 2;
    const DensityMatrix rho(random_density(m * n, rng), {m, n});
    const ProjectiveBasis b1(haar_unitary(m, rng)), b2(haar_unitary(n, rng));

    const DensityMatrix p1 = apply_phi1(rho, b1);
    const DensityMatrix p2 = apply_phi2(rho, b2);
    const DensityMatrix p12 = apply_phi12(rho, b1, b2);
    CHECK((p1.matrix() - oracle::channel_first(rho.matrix(), b1.vectors(), n)).norm() < 1e-12);
    CHECK((p2.matrix() - oracle::channel_second(rho.matrix(), b2.vectors(), m)).norm() < 1e-12);
    CHECK((p12.matrix() - oracle::channel_both(rho.matrix(), b1.vectors(), b2.vectors())).norm() < 1e-12);

    CHECK((apply_phi1(p1, b1).matrix() - p1.matrix()).norm() < 1e-12);
    CHECK((apply_phi2(p2, b2).matrix() - p2.matrix()).norm() < 1e-12);
    CHECK((apply_phi12(p12, b1, b2).matrix() - p12.matrix()).norm() < 1e-12);
    CHECK((apply_phi1(p2, b1).matrix() - apply_phi2(p1, b2).matrix()).norm() < 1e-12);
    CHECK((apply_phi1(p2, b1).matrix() - p12.matrix()).norm() < 1e-12);

    for (const DensityMatrix* out : {&p1, &p2, &p12}) {
      CHECK(std::abs(out->matrix().trace().real() - 1.0) <= 1e-12);
      CHECK(purity(*out) <= purity(rho) + 1e-12);
    }
    CHECK(is_classical_in(p1, Subsystem::kFirst, b1));
    CHECK(is_classical_in(p2, Subsystem::kSecond, b2));
    CHECK(classify(p12, b1, b2) == StateClass::kClassicalClassical);
    CHECK(std::abs(dephased_purity(rho.matrix(), rho.dims(), &b1.vectors(), nullptr) - purity(p1)) < 1e-12);
    CHECK(std::abs(dephased_purity(rho.matrix(), rho.dims(), nullptr, &b2.vectors()) - purity(p2)) < 1e-12);
    CHECK(std::abs(dephased_purity(rho.matrix(), rho.dims(), &b1.vectors(), &b2.vectors()) - purity(p12)) < 1e-12);
  }

  const DensityMatrix rho(random_density(4, rng), {2, 2});
  const Matrix pinched = rho.matrix().diagonal().asDiagonal();
  CHECK((apply_phi12(rho, ProjectiveBasis::computational(2), ProjectiveBasis::computational(2)).matrix() -
         pinched).norm() < 1e-15);
  CHECK_THROWS_AS(apply_phi1(rho, ProjectiveBasis::computational(3)), InvalidInput);
  CHECK_THROWS_AS(apply_phi2(rho, ProjectiveBasis::computational(3)), InvalidInput);
}

TEST_CASE("fixed points of the channels") {
  RngStream rng(37);
  StateParams params;
  params.basis1 = haar_unitary(2, rng);
  params.basis2 = haar_unitary(3, rng);
  const ProjectiveBasis b1(*params.basis1), b2(*params.basis2);
  const DensityMatrix cq = make_state(StateKind::kCQ, {2, 3}, rng, params);
  const DensityMatrix qc = make_state(StateKind::kQC, {2, 3}, rng, params);
  const DensityMatrix cc = make_state(StateKind::kCC, {2, 3}, rng, params);
  CHECK((apply_phi1(cq, b1).matrix() - cq.matrix()).norm() < 1e-12);
  CHECK((apply_phi2(qc, b2).matrix() - qc.matrix()).norm() < 1e-12);
  CHECK((apply_phi12(cc, b1, b2).matrix() - cc.matrix()).norm() < 1e-12);
  CHECK(classify(cq, b1, b2) == StateClass::kClassicalQuantum);
  CHECK(classify(qc, b1, b2) == StateClass::kQuantumClassical);
  CHECK(classify(cc, b1, b2) == StateClass::kClassicalClassical);
  CHECK(is_cq(cq));
  CHECK(is_qc(qc));
  CHECK_FALSE(is_cq(DensityMatrix(oracle::bell_projector(), {2, 2})));
}

TEST_CASE("bloch row matrices") {
  const RealMatrix a = bloch_row_matrix(ProjectiveBasis::computational(2), Subsystem::kFirst);
  const GeneratorBasis& g = generator_basis(2);
  Matrix up = Matrix::Zero(2, 2), down = Matrix::Zero(2, 2);
  up(0, 0) = 1.0;
  down(1, 1) = 1.0;
  CHECK((a.row(0).transpose() - g.coordinates(up)).norm() < 1e-15);
  CHECK((a.row(1).transpose() - g.coordinates(down)).norm() < 1e-15);

  RngStream rng(41);
  for (int d = 2; d <= 4; ++d) {
    const RealMatrix r = bloch_row_matrix(ProjectiveBasis(haar_unitary(d, rng)), Subsystem::kSecond);
    CHECK((r * r.transpose() - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((r.col(0).array() - 1.0 / std::sqrt(d)).abs().maxCoeff() < 1e-12);
  }
}
