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

#ifndef VNCORR_MEASUREMENT_HPP
#define VNCORR_MEASUREMENT_HPP

#include "vncorr/common.hpp"
#include "vncorr/statekit.hpp"

namespace vncorr {

/// Complete family of rank-1 orthogonal projectors, stored as the columns of
/// a unitary. Projectors are formed on demand.
class ProjectiveBasis {
 public:
  /// Throws InvalidInput unless `vectors` is unitary within kTolerances.basis.
  explicit ProjectiveBasis(Matrix vectors);

  static ProjectiveBasis computational(int d);
  /// Discrete Fourier basis; {|+>, |->} for d = 2.
  static ProjectiveBasis fourier(int d);

  int dim() const { return static_cast<int>(vectors_.rows()); }
  const Matrix& vectors() const { return vectors_; }
  Vector vector(int u) const { return vectors_.col(u); }
  Matrix projector(int u) const { return vectors_.col(u) * vectors_.col(u).adjoint(); }

 private:
  Matrix vectors_;
};

/// Optimization coordinates for one side's measurement: d^2 reals giving the
/// Hermitian generator H = sum_k theta_k X_k in the generator basis.
struct MeasurementParams {
  RealVector theta;
  Subsystem side = Subsystem::kFirst;
};

/// exp(iH) for Hermitian H.
Matrix unitary_exp(const Matrix& hermitian);

/// Basis given by the columns of exp(i H(theta)).
ProjectiveBasis basis_from_params(const RealVector& theta, int d);
ProjectiveBasis basis_from_params(const MeasurementParams& params, int d);

DensityMatrix apply_phi1(const DensityMatrix& rho, const ProjectiveBasis& basis);
DensityMatrix apply_phi2(const DensityMatrix& rho, const ProjectiveBasis& basis);
DensityMatrix apply_phi12(const DensityMatrix& rho, const ProjectiveBasis& basis1,
                          const ProjectiveBasis& basis2);

/// Raw-matrix channel: dephases the first side in the columns of `u1` and/or
/// the second side in the columns of `u2` (nullptr leaves a side untouched).
Matrix dephase(const Matrix& rho, const BipartiteDims& dims, const Matrix* u1, const Matrix* u2);

/// tr[(Phi(rho))^2] for the channel selected by the non-null bases, without
/// forming Phi(rho).
double dephased_purity(const Matrix& rho, const BipartiteDims& dims, const Matrix* u1,
                       const Matrix* u2);

/// Row k holds the generator-basis coordinates of |k><k|: a_ki = <k|X_i|k>.
/// Rows are orthonormal, A A^T = I_d.
RealMatrix bloch_row_matrix(const ProjectiveBasis& basis, Subsystem side);

/// True if rho is a fixed point of the one-sided channel in `basis`.
bool is_classical_in(const DensityMatrix& rho, Subsystem side, const ProjectiveBasis& basis,
                     double tol = 1e-10);

StateClass classify(const DensityMatrix& rho, const ProjectiveBasis& basis1,
                    const ProjectiveBasis& basis2, double tol = 1e-10);

/// Basis-free test for C-Q form (first side classical in *some* basis): the
/// first-side operators tr_B[rho (I (x) Y_j)] are Hermitian and commute
/// pairwise.
bool is_cq(const DensityMatrix& rho, double tol = 1e-9);
/// Mirror of is_cq for the second side.
bool is_qc(const DensityMatrix& rho, double tol = 1e-9);

}  // namespace vncorr

#endif  // VNCORR_MEASUREMENT_HPP
