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

#ifndef VNCORR_CLOSEDFORM_HPP
#define VNCORR_CLOSEDFORM_HPP

#include <optional>
#include <string_view>

#include "vncorr/correlator.hpp"
#include "vncorr/generators.hpp"
#include "vncorr/statekit.hpp"

namespace vncorr {

/// 1 - sum_i lambda_i^4 for Schmidt coefficients lambda (sum lambda^2 = 1).
/// For pure states this is Q1 = Q2 = Q12 = delta.
double pure_state_correlation(const RealVector& lambdas);

enum class Family { kIsotropic, kWerner };

std::string_view to_string(Family f);

/// Isotropic: fidelity f1 = <psi+|rho|psi+> in [0, 1].
/// Werner: fidelity f2 = tr(rho V) in [-1, 1], V the swap.
struct FamilyParams {
  Family family = Family::kIsotropic;
  int n = 2;
  double fidelity = 1.0;

  void validate() const;
};

/// |psi+> = sum_i |ii> / sqrt(n).
Vector maximally_entangled(int n);
/// V = sum_ij |ij><ji| on C^n (x) C^n.
Matrix swap_operator(int n);

DensityMatrix make_family(const FamilyParams& p);

/// Closed-form Q1 = Q2 = Q12 = delta for the family:
/// (n^2 f1 - 1)^2 / (n (n+1)^2 (n-1)) or (n f2 - 1)^2 / (n (n+1)^2 (n-1)).
double family_correlation(const FamilyParams& p);

/// rho = sum_ij c_ij X_i (x) Y_j over the orthonormal generator bases of
/// both sides, so that tr rho^2 = sum_ij c_ij^2.
struct BlochDecomposition {
  RealMatrix c;  // m^2 x n^2
  BipartiteDims dims;

  Matrix reconstruct() const;
};

BlochDecomposition bloch_decompose(const DensityMatrix& rho);

/// tr(CC^T) - tr(A C C^T A^T)        (kQ1)
/// tr(CC^T) - tr(B C^T C B^T)        (kQ2)
/// tr(CC^T) - tr(A C B^T B C^T A^T)  (kQ12)
/// with A, B from bloch_row_matrix.
double q_bloch_objective(const BlochDecomposition& c, const std::optional<RealMatrix>& a,
                         const std::optional<RealMatrix>& b, Which which);

struct SpectralBounds {
  double lb_q1 = 0.0;  // also bounds Q12
  double lb_q2 = 0.0;
};

/// Tail sums of the descending spectra of CC^T (past the first m) and C^T C
/// (past the first n).
SpectralBounds spectral_lower_bounds(const BlochDecomposition& c);

}  // namespace vncorr

#endif  // VNCORR_CLOSEDFORM_HPP
