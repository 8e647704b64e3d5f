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

#include "vncorr/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <numbers>
#include <string>

#include "vncorr/generators.hpp"

namespace vncorr {

namespace {

void require_dim(int got, int want, const char* what) {
  if (got != want) {
    throw InvalidInput(std::string(what) + ": basis dimension " + std::to_string(got) +
                       " does not match subsystem dimension " + std::to_string(want));
  }
}

Matrix side_rotation(const BipartiteDims& dims, const Matrix* u1, const Matrix* u2) {
  const Matrix a = u1 ? *u1 : Matrix::Identity(dims.m, dims.m);
  const Matrix b = u2 ? *u2 : Matrix::Identity(dims.n, dims.n);
  return tensor_product(a, b);
}

// Entry (r, c) of the rotated frame survives the channel.
bool kept(int r, int c, int n, bool first, bool second) {
  if (first && r / n != c / n) return false;
  if (second && r % n != c % n) return false;
  return true;
}

// Operators M_j = tr_other[rho (Y_j on the other side)] for the kept side.
std::vector<Matrix> side_components(const DensityMatrix& rho, Subsystem keep) {
  const int m = rho.dims().m;
  const int n = rho.dims().n;
  const Matrix& r = rho.matrix();
  const int other = keep == Subsystem::kFirst ? n : m;
  const GeneratorBasis& basis = generator_basis(other);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(basis.size()));
  for (const Matrix& y : basis.operators()) {
    if (keep == Subsystem::kFirst) {
      out.push_back(partial_trace(r * tensor_product(Matrix::Identity(m, m), y), rho.dims(),
                                  Subsystem::kFirst));
    } else {
      out.push_back(partial_trace(r * tensor_product(y, Matrix::Identity(n, n)), rho.dims(),
                                  Subsystem::kSecond));
    }
  }
  return out;
}

bool components_commute(const std::vector<Matrix>& ops, double tol) {
  for (std::size_t a = 0; a < ops.size(); ++a) {
    if ((ops[a] - ops[a].adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      const Matrix comm = ops[a] * ops[b] - ops[b] * ops[a];
      if (comm.cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

}  // namespace

ProjectiveBasis::ProjectiveBasis(Matrix vectors) : vectors_(std::move(vectors)) {
  if (vectors_.rows() != vectors_.cols() || vectors_.rows() < 1) {
    throw InvalidInput("projective basis needs d vectors of length d");
  }
  const auto d = vectors_.rows();
  const double dev = (vectors_.adjoint() * vectors_ - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(dev <= kTolerances.basis)) {
    throw InvalidInput("projective basis vectors are not orthonormal (deviation " +
                       std::to_string(dev) + ")");
  }
}

ProjectiveBasis ProjectiveBasis::computational(int d) {
  return ProjectiveBasis(Matrix::Identity(d, d));
}

ProjectiveBasis ProjectiveBasis::fourier(int d) {
  Matrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * j * k / d);
    }
  }
  return ProjectiveBasis(std::move(f));
}

Matrix unitary_exp(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
  const Matrix& v = eig.eigenvectors();
  Vector phases(v.cols());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, eig.eigenvalues()(k));
  return v * phases.asDiagonal() * v.adjoint();
}

ProjectiveBasis basis_from_params(const RealVector& theta, int d) {
  if (theta.size() != static_cast<Eigen::Index>(d) * d) {
    throw InvalidInput("measurement parameters need d^2 = " + std::to_string(d * d) +
                       " entries, got " + std::to_string(theta.size()));
  }
  if (!theta.allFinite()) throw InvalidInput("measurement parameters must be finite");
  return ProjectiveBasis(unitary_exp(generator_basis(d).combine(theta)));
}

ProjectiveBasis basis_from_params(const MeasurementParams& params, int d) {
  return basis_from_params(params.theta, d);
}

Matrix dephase(const Matrix& rho, const BipartiteDims& dims, const Matrix* u1, const Matrix* u2) {
  const Matrix rot = side_rotation(dims, u1, u2);
  Matrix w = rot.adjoint() * rho * rot;
  const int d = dims.total();
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) {
      if (!kept(r, c, dims.n, u1 != nullptr, u2 != nullptr)) w(r, c) = 0.0;
    }
  }
  return rot * w * rot.adjoint();
}

double dephased_purity(const Matrix& rho, const BipartiteDims& dims, const Matrix* u1,
                       const Matrix* u2) {
  const int m = dims.m;
  const int n = dims.n;
  if (!u1 && !u2) return rho.squaredNorm();

  const int d = dims.total();
  if (u1) {
    // Conditional blocks B_u = (<u| (x) I) rho (|u> (x) I), each n x n.
    double total = 0.0;
    std::vector<Complex> block(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < m; ++u) {
      std::fill(block.begin(), block.end(), Complex{});
      for (int i = 0; i < m; ++i) {
        const Complex ci = std::conj((*u1)(i, u));
        for (int k = 0; k < m; ++k) {
          const Complex w = ci * (*u1)(k, u);
          for (int l = 0; l < n; ++l) {
            const Complex* col = rho.data() + static_cast<std::ptrdiff_t>(k * n + l) * d + i * n;
            Complex* out = block.data() + static_cast<std::ptrdiff_t>(l) * n;
            for (int j = 0; j < n; ++j) out[j] += w * col[j];
          }
        }
      }
      if (!u2) {
        for (const Complex& x : block) total += std::norm(x);
        continue;
      }
      for (int v = 0; v < n; ++v) {
        Complex p{};
        for (int l = 0; l < n; ++l) {
          Complex bv{};
          for (int j = 0; j < n; ++j) bv += block[static_cast<std::size_t>(l) * n + j] * std::conj((*u2)(j, v));
          p += bv * (*u2)(l, v);
        }
        total += std::norm(p);
      }
    }
    return total;
  }

  // Second side only: blocks (I (x) <v|) rho (I (x) |v>), each m x m.
  double total = 0.0;
  Matrix block(m, m);
  for (int v = 0; v < n; ++v) {
    block.setZero();
    for (int j = 0; j < n; ++j) {
      const Complex cj = std::conj((*u2)(j, v));
      for (int l = 0; l < n; ++l) {
        const Complex w = cj * (*u2)(l, v);
        for (int i = 0; i < m; ++i) {
          for (int k = 0; k < m; ++k) block(i, k) += w * rho(i * n + j, k * n + l);
        }
      }
    }
    total += block.squaredNorm();
  }
  return total;
}

DensityMatrix apply_phi1(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  require_dim(basis.dim(), rho.dims().m, "apply_phi1");
  return DensityMatrix::trusted(dephase(rho.matrix(), rho.dims(), &basis.vectors(), nullptr),
                                rho.dims());
}

DensityMatrix apply_phi2(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  require_dim(basis.dim(), rho.dims().n, "apply_phi2");
  return DensityMatrix::trusted(dephase(rho.matrix(), rho.dims(), nullptr, &basis.vectors()),
                                rho.dims());
}

DensityMatrix apply_phi12(const DensityMatrix& rho, const ProjectiveBasis& basis1,
                          const ProjectiveBasis& basis2) {
  require_dim(basis1.dim(), rho.dims().m, "apply_phi12");
  require_dim(basis2.dim(), rho.dims().n, "apply_phi12");
  return DensityMatrix::trusted(
      dephase(rho.matrix(), rho.dims(), &basis1.vectors(), &basis2.vectors()), rho.dims());
}

RealMatrix bloch_row_matrix(const ProjectiveBasis& basis, Subsystem /*side*/) {
  const int d = basis.dim();
  const GeneratorBasis& gen = generator_basis(d);
  RealMatrix a(d, gen.size());
  for (int k = 0; k < d; ++k) {
    const Vector v = basis.vector(k);
    for (int i = 0; i < gen.size(); ++i) a(k, i) = v.dot(gen[i] * v).real();
  }
  return a;
}

bool is_classical_in(const DensityMatrix& rho, Subsystem side, const ProjectiveBasis& basis,
                     double tol) {
  const DensityMatrix out =
      side == Subsystem::kFirst ? apply_phi1(rho, basis) : apply_phi2(rho, basis);
  return (out.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= tol;
}

StateClass classify(const DensityMatrix& rho, const ProjectiveBasis& basis1,
                    const ProjectiveBasis& basis2, double tol) {
  const bool cq = is_classical_in(rho, Subsystem::kFirst, basis1, tol);
  const bool qc = is_classical_in(rho, Subsystem::kSecond, basis2, tol);
  if (cq && qc) return StateClass::kClassicalClassical;
  if (cq) return StateClass::kClassicalQuantum;
  if (qc) return StateClass::kQuantumClassical;
  return StateClass::kGeneral;
}

bool is_cq(const DensityMatrix& rho, double tol) {
  return components_commute(side_components(rho, Subsystem::kFirst), tol);
}

bool is_qc(const DensityMatrix& rho, double tol) {
  return components_commute(side_components(rho, Subsystem::kSecond), tol);
}

}  // namespace vncorr
