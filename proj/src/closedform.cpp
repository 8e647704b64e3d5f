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

#include "vncorr/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vncorr {

double pure_state_correlation(const RealVector& lambdas) {
  if ((lambdas.array() < 0.0).any()) throw InvalidInput("Schmidt coefficients must be nonnegative");
  const double norm = lambdas.squaredNorm();
  if (std::abs(norm - 1.0) > kTolerances.schmidt_sum) {
    throw InvalidInput("Schmidt coefficients must satisfy sum lambda^2 = 1 (got " +
                       std::to_string(norm) + ")");
  }
  return 1.0 - lambdas.array().pow(4).sum();
}

std::string_view to_string(Family f) {
  return f == Family::kIsotropic ? "isotropic" : "werner";
}

void FamilyParams::validate() const {
  if (n < 2) throw InvalidInput("family dimension n must be >= 2");
  const double lo = family == Family::kIsotropic ? 0.0 : -1.0;
  if (!(fidelity >= lo && fidelity <= 1.0)) {
    throw InvalidInput(std::string(to_string(family)) + " fidelity must lie in [" +
                       (family == Family::kIsotropic ? "0" : "-1") + ", 1], got " +
                       std::to_string(fidelity));
  }
}

Vector maximally_entangled(int n) {
  Vector v = Vector::Zero(n * n);
  for (int i = 0; i < n; ++i) v(i * n + i) = 1.0;
  return v / std::sqrt(static_cast<double>(n));
}

Matrix swap_operator(int n) {
  Matrix v = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) v(i * n + j, j * n + i) = 1.0;
  }
  return v;
}

DensityMatrix make_family(const FamilyParams& p) {
  p.validate();
  const double n = p.n;
  const double f = p.fidelity;
  const int d = p.n * p.n;
  Matrix rho;
  if (p.family == Family::kIsotropic) {
    const Vector psi = maximally_entangled(p.n);
    rho = (1.0 - f) / (n * n - 1.0) * Matrix::Identity(d, d) +
          (n * n * f - 1.0) / (n * n - 1.0) * (psi * psi.adjoint());
  } else {
    const double denom = n * n * n - n;
    rho = (n - f) / denom * Matrix::Identity(d, d) + (n * f - 1.0) / denom * swap_operator(p.n);
  }
  return DensityMatrix(std::move(rho), BipartiteDims(p.n, p.n));
}

double family_correlation(const FamilyParams& p) {
  p.validate();
  const double n = p.n;
  const double scale = n * (n + 1.0) * (n + 1.0) * (n - 1.0);
  const double lead = p.family == Family::kIsotropic ? n * n * p.fidelity - 1.0 : n * p.fidelity - 1.0;
  return lead * lead / scale;
}

Matrix BlochDecomposition::reconstruct() const {
  const GeneratorBasis& xs = generator_basis(dims.m);
  const GeneratorBasis& ys = generator_basis(dims.n);
  Matrix rho = Matrix::Zero(dims.total(), dims.total());
  for (int i = 0; i < xs.size(); ++i) {
    for (int j = 0; j < ys.size(); ++j) {
      if (c(i, j) != 0.0) rho += c(i, j) * tensor_product(xs[i], ys[j]);
    }
  }
  return rho;
}

BlochDecomposition bloch_decompose(const DensityMatrix& rho) {
  const BipartiteDims& dims = rho.dims();
  const GeneratorBasis& xs = generator_basis(dims.m);
  const GeneratorBasis& ys = generator_basis(dims.n);
  const Matrix id_m = Matrix::Identity(dims.m, dims.m);
  BlochDecomposition out{RealMatrix(xs.size(), ys.size()), dims};
  for (int j = 0; j < ys.size(); ++j) {
    // tr(rho X (x) Y) = tr(X tr_B[rho (I (x) Y)])
    const Matrix reduced =
        partial_trace(rho.matrix() * tensor_product(id_m, ys[j]), dims, Subsystem::kFirst);
    out.c.col(j) = xs.coordinates(reduced);
  }
  return out;
}

double q_bloch_objective(const BlochDecomposition& c, const std::optional<RealMatrix>& a,
                         const std::optional<RealMatrix>& b, Which which) {
  const RealMatrix& cm = c.c;
  auto check = [](const std::optional<RealMatrix>& x, int d, const char* name) -> const RealMatrix& {
    if (!x) throw InvalidInput(std::string(name) + " is required");
    if (x->rows() != d || x->cols() != d * d) {
      throw InvalidInput(std::string(name) + " must be " + std::to_string(d) + "x" +
                         std::to_string(d * d));
    }
    return *x;
  };
  const double total = cm.squaredNorm();  // tr(C C^T)
  switch (which) {
    case Which::kQ1: {
      const RealMatrix& am = check(a, c.dims.m, "A");
      return total - (am * cm).squaredNorm();
    }
    case Which::kQ2: {
      const RealMatrix& bm = check(b, c.dims.n, "B");
      return total - (bm * cm.transpose()).squaredNorm();
    }
    case Which::kQ12:
      break;
  }
  const RealMatrix& am = check(a, c.dims.m, "A");
  const RealMatrix& bm = check(b, c.dims.n, "B");
  // tr(A C B^T B C^T A^T) = ||A C B^T||_F^2
  return total - (am * cm * bm.transpose()).squaredNorm();
}

SpectralBounds spectral_lower_bounds(const BlochDecomposition& c) {
  auto tail = [](const RealMatrix& gram, int keep) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(gram, Eigen::EigenvaluesOnly);
    RealVector ev = eig.eigenvalues();  // ascending
    std::sort(ev.data(), ev.data() + ev.size(), std::greater<>());
    double sum = 0.0;
    for (Eigen::Index i = keep; i < ev.size(); ++i) sum += ev(i);
    return std::max(0.0, sum);
  };
  return {tail(c.c * c.c.transpose(), c.dims.m), tail(c.c.transpose() * c.c, c.dims.n)};
}

}  // namespace vncorr
