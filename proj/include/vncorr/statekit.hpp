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

#ifndef VNCORR_STATEKIT_HPP
#define VNCORR_STATEKIT_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "vncorr/common.hpp"
#include "vncorr/rng.hpp"

namespace vncorr {

/// Dimensions of H_m (x) H_n. The first subsystem is the slow (outer) index:
/// basis state |i j> sits at position i * n + j.
struct BipartiteDims {
  int m = 2;
  int n = 2;

  BipartiteDims() = default;
  BipartiteDims(int first, int second);

  int total() const { return m * n; }
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

enum class Subsystem { kFirst, kSecond };

enum class StateClass { kClassicalClassical, kClassicalQuantum, kQuantumClassical, kGeneral };

std::string_view to_string(StateClass c);

/// Bipartite density matrix. Construction checks Hermiticity, unit trace and
/// positive semidefiniteness against `kTolerances` and throws
/// ValidationError naming the first invariant that fails.
class DensityMatrix {
 public:
  DensityMatrix(Matrix entries, BipartiteDims dims);

  /// Skips the invariant checks. For results of trace-preserving,
  /// positivity-preserving maps applied to an already valid state.
  static DensityMatrix trusted(Matrix entries, BipartiteDims dims);

  const Matrix& matrix() const { return entries_; }
  const BipartiteDims& dims() const { return dims_; }
  int size() const { return static_cast<int>(entries_.rows()); }

 private:
  struct Unchecked {};
  DensityMatrix(Matrix entries, BipartiteDims dims, Unchecked);

  Matrix entries_;
  BipartiteDims dims_;
};

/// Unit-norm bipartite pure state. Inputs off by more than
/// `pure_norm_reject` are rejected; smaller deviations are renormalized.
class PureStateVec {
 public:
  PureStateVec(Vector amplitudes, BipartiteDims dims);

  const Vector& amplitudes() const { return amplitudes_; }
  const BipartiteDims& dims() const { return dims_; }
  DensityMatrix projector() const;

 private:
  Vector amplitudes_;
  BipartiteDims dims_;
};

struct SchmidtDecomposition {
  RealVector coefficients;  // nonincreasing, min(m, n) entries
  Matrix left_basis;        // columns |a_i>, m x min(m, n)
  Matrix right_basis;       // columns |b_i>, n x min(m, n)

  Vector reconstruct() const;
};

// Tensor algebra ------------------------------------------------------------

Matrix tensor_product(const Matrix& a, const Matrix& b);

Matrix partial_trace(const Matrix& rho, const BipartiteDims& dims, Subsystem keep);
Matrix partial_trace(const DensityMatrix& rho, Subsystem keep);

double purity(const DensityMatrix& rho);

/// tr(rho^2) evaluated as 1 - 2 tr(P_- rho (x) rho), with P_- = (1 - S)/2 the
/// projector onto the antisymmetric subspace of two copies.
double purity_via_swap(const DensityMatrix& rho);

SchmidtDecomposition schmidt(const PureStateVec& psi);

/// C^2(psi) = 2 (1 - sum_i lambda_i^4).
double concurrence_sq_pure(const PureStateVec& psi);

// Random sampling -----------------------------------------------------------

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// column phases fixed by the diagonal of R.
Matrix haar_unitary(int d, RngStream& rng);

enum class StateKind { kCC, kCQ, kQC, kProduct, kRandomMixed, kRandomPure };

struct StateParams {
  /// CC: m*n weights p_ij (row-major); CQ: m weights; QC: n weights.
  /// Empty means "draw at random".
  std::vector<double> probabilities;
  /// Columns are the classical basis of the first / second side. Defaults to
  /// the computational basis.
  std::optional<Matrix> basis1;
  std::optional<Matrix> basis2;
  /// Rank of the Ginibre factor for random_mixed; 0 means full rank.
  int rank = 0;
};

DensityMatrix make_state(StateKind kind, const BipartiteDims& dims, RngStream& rng,
                         const StateParams& params = {});

/// rho = G G^dagger / tr(G G^dagger) with G a d x rank complex Gaussian matrix.
Matrix random_density(int d, RngStream& rng, int rank = 0);

PureStateVec random_pure(const BipartiteDims& dims, RngStream& rng);

Vector basis_ket(int d, int index);
Vector ket(const BipartiteDims& dims, int i, int j);

}  // namespace vncorr

#endif  // VNCORR_STATEKIT_HPP
