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

#ifndef VNCORR_GENERATORS_HPP
#define VNCORR_GENERATORS_HPP

#include <vector>

#include "vncorr/common.hpp"

namespace vncorr {

/// Hilbert-Schmidt orthonormal Hermitian operator basis of d x d matrices:
/// I/sqrt(d) first, then the generalized Gell-Mann matrices divided by
/// sqrt(2), ordered as symmetric pairs, antisymmetric pairs, then diagonal
/// operators, each in lexicographic index order. tr(X_i X_j) = delta_ij.
class GeneratorBasis {
 public:
  explicit GeneratorBasis(int d);

  int dimension() const { return d_; }
  int size() const { return static_cast<int>(ops_.size()); }
  const Matrix& operator[](int i) const { return ops_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& operators() const { return ops_; }

  /// Real coordinates c_i = tr(X_i h) of a Hermitian matrix.
  RealVector coordinates(const Matrix& h) const;
  /// sum_i c_i X_i.
  Matrix combine(const RealVector& c) const;

 private:
  int d_;
  std::vector<Matrix> ops_;
};

/// Shared, lazily built basis for dimension d. Thread-safe.
const GeneratorBasis& generator_basis(int d);

}  // namespace vncorr

#endif  // VNCORR_GENERATORS_HPP
