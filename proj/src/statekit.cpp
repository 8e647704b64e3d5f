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

#include "vncorr/statekit.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace vncorr {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void check_unitary(const Matrix& u, int d, const char* what) {
  if (u.rows() != d || u.cols() != d) {
    throw InvalidInput(std::string(what) + " must be " + std::to_string(d) + "x" +
                       std::to_string(d));
  }
  const double dev = (u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > kTolerances.basis) {
    throw InvalidInput(std::string(what) + " is not unitary (deviation " + fmt_double(dev) +
                       ")");
  }
}

std::vector<double> checked_probabilities(const std::vector<double>& p, std::size_t expected,
                                          RngStream& rng) {
  if (p.empty()) {
    std::vector<double> w(expected);
    double total = 0.0;
    for (auto& x : w) {
      x = -std::log(1.0 - rng.uniform());
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }
  if (p.size() != expected) {
    throw InvalidInput("probability vector has " + std::to_string(p.size()) +
                       " entries, expected " + std::to_string(expected));
  }
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw InvalidInput("probabilities must be nonnegative");
    total += x;
  }
  if (std::abs(total - 1.0) > kTolerances.probability) {
    throw InvalidInput("probabilities must sum to 1 (sum " + fmt_double(total) + ")");
  }
  return p;
}

Matrix outer(const Vector& v) { return v * v.adjoint(); }

}  // namespace

BipartiteDims::BipartiteDims(int first, int second) : m(first), n(second) {
  if (m < 2 || n < 2) {
    throw InvalidInput("subsystem dimensions must be >= 2, got " + std::to_string(m) + "x" +
                       std::to_string(n));
  }
}

std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::kClassicalClassical:
      return "CC";
    case StateClass::kClassicalQuantum:
      return "CQ";
    case StateClass::kQuantumClassical:
      return "QC";
    case StateClass::kGeneral:
      break;
  }
  return "general";
}

DensityMatrix::DensityMatrix(Matrix entries, BipartiteDims dims, Unchecked)
    : entries_(std::move(entries)), dims_(dims) {}

DensityMatrix DensityMatrix::trusted(Matrix entries, BipartiteDims dims) {
  return DensityMatrix(std::move(entries), dims, Unchecked{});
}

DensityMatrix::DensityMatrix(Matrix entries, BipartiteDims dims) : dims_(dims) {
  const int d = dims.total();
  if (entries.rows() != d || entries.cols() != d) {
    throw ValidationError("dimensions", "matrix is " + std::to_string(entries.rows()) + "x" +
                                            std::to_string(entries.cols()) + ", dims require " +
                                            std::to_string(d) + "x" + std::to_string(d));
  }
  if (!entries.allFinite()) throw ValidationError("finite", "matrix has non-finite entries");
  const double herm = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kTolerances.hermitian) {
    throw ValidationError("hermitian", "max |rho - rho^dagger| = " + fmt_double(herm));
  }
  entries_ = (entries + entries.adjoint()) / 2.0;
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > kTolerances.trace) {
    throw ValidationError("unit trace", "trace = " + fmt_double(tr));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(entries_, Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  if (min_eig < -kTolerances.psd) {
    throw ValidationError("positive semidefinite", "smallest eigenvalue = " + fmt_double(min_eig));
  }
}

PureStateVec::PureStateVec(Vector amplitudes, BipartiteDims dims) : dims_(dims) {
  if (amplitudes.size() != dims.total()) {
    throw InvalidInput("state vector has " + std::to_string(amplitudes.size()) +
                       " amplitudes, dims require " + std::to_string(dims.total()));
  }
  const double norm = amplitudes.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kTolerances.pure_norm_reject) {
    throw InvalidInput("state vector is not normalized (norm " + fmt_double(norm) + ")");
  }
  amplitudes_ = amplitudes / norm;
}

DensityMatrix PureStateVec::projector() const {
  return DensityMatrix::trusted(outer(amplitudes_), dims_);
}

Vector SchmidtDecomposition::reconstruct() const {
  const auto m = left_basis.rows();
  const auto n = right_basis.rows();
  Vector out = Vector::Zero(m * n);
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    for (Eigen::Index i = 0; i < m; ++i) {
      out.segment(i * n, n) += coefficients(k) * left_basis(i, k) * right_basis.col(k);
    }
  }
  return out;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, const BipartiteDims& dims, Subsystem keep) {
  const int m = dims.m;
  const int n = dims.n;
  if (rho.rows() != m * n || rho.cols() != m * n) {
    throw InvalidInput("partial_trace: matrix size does not match dims " + std::to_string(m) +
                       "x" + std::to_string(n));
  }
  if (keep == Subsystem::kFirst) {
    Matrix out(m, m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) out(i, k) = rho.block(i * n, k * n, n, n).trace();
    }
    return out;
  }
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) out += rho.block(i * n, i * n, n, n);
  return out;
}

Matrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  return partial_trace(rho.matrix(), rho.dims(), keep);
}

double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

double purity_via_swap(const DensityMatrix& rho) {
  // Two copies live on C^d (x) C^d with index (a, b) -> a * d + b. The swap S
  // maps |a b> to |b a>, so for X = rho (x) rho:
  //   tr X      = sum_{a,b} X_{(a,b),(a,b)} = sum rho_aa rho_bb
  //   tr (S X)  = sum_{a,b} X_{(b,a),(a,b)} = sum rho_ba rho_ab
  const Matrix& r = rho.matrix();
  const Eigen::Index d = r.rows();
  auto doubled = [&](Eigen::Index a, Eigen::Index b, Eigen::Index c, Eigen::Index e) {
    return r(a, c) * r(b, e);  // <a b| rho (x) rho |c e>
  };
  Complex tr_x{0.0, 0.0};
  Complex tr_sx{0.0, 0.0};
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      tr_x += doubled(a, b, a, b);
      tr_sx += doubled(b, a, a, b);
    }
  }
  const Complex antisym = 0.5 * (tr_x - tr_sx);  // tr(P_- rho (x) rho)
  return 1.0 - 2.0 * antisym.real();
}

SchmidtDecomposition schmidt(const PureStateVec& psi) {
  const int m = psi.dims().m;
  const int n = psi.dims().n;
  Matrix coeff(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) coeff(i, j) = psi.amplitudes()(i * n + j);
  }
  Eigen::JacobiSVD<Matrix> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left_basis = svd.matrixU();
  // coeff = U S V^dagger, so psi_ij = sum_k s_k U_ik conj(V_jk).
  out.right_basis = svd.matrixV().conjugate();
  return out;
}

double concurrence_sq_pure(const PureStateVec& psi) {
  const RealVector lambda = schmidt(psi).coefficients;
  return 2.0 * (1.0 - lambda.array().pow(4).sum());
}

Matrix haar_unitary(int d, RngStream& rng) {
  if (d < 1) throw InvalidInput("haar_unitary: dimension must be >= 1");
  Matrix g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= mag > 0.0 ? diag / mag : Complex{1.0, 0.0};
  }
  return q;
}

Matrix random_density(int d, RngStream& rng, int rank) {
  if (rank <= 0 || rank > d) rank = d;
  Matrix g(d, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return (rho + rho.adjoint()) / 2.0;
}

PureStateVec random_pure(const BipartiteDims& dims, RngStream& rng) {
  Vector v(dims.total());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  return PureStateVec(v / v.norm(), dims);
}

Vector basis_ket(int d, int index) {
  Vector v = Vector::Zero(d);
  v(index) = 1.0;
  return v;
}

Vector ket(const BipartiteDims& dims, int i, int j) {
  return basis_ket(dims.total(), i * dims.n + j);
}

DensityMatrix make_state(StateKind kind, const BipartiteDims& dims, RngStream& rng,
                         const StateParams& params) {
  const int m = dims.m;
  const int n = dims.n;
  const Matrix b1 = params.basis1.value_or(Matrix::Identity(m, m));
  const Matrix b2 = params.basis2.value_or(Matrix::Identity(n, n));
  check_unitary(b1, m, "basis1");
  check_unitary(b2, n, "basis2");

  Matrix rho = Matrix::Zero(m * n, m * n);
  switch (kind) {
    case StateKind::kCC: {
      const auto p = checked_probabilities(params.probabilities, m * n, rng);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          const double w = p[i * n + j];
          if (w == 0.0) continue;
          rho += w * tensor_product(outer(b1.col(i)), outer(b2.col(j)));
        }
      }
      break;
    }
    case StateKind::kCQ: {
      const auto p = checked_probabilities(params.probabilities, m, rng);
      for (int i = 0; i < m; ++i) {
        rho += p[i] * tensor_product(outer(b1.col(i)), random_density(n, rng));
      }
      break;
    }
    case StateKind::kQC: {
      const auto p = checked_probabilities(params.probabilities, n, rng);
      for (int j = 0; j < n; ++j) {
        rho += p[j] * tensor_product(random_density(m, rng), outer(b2.col(j)));
      }
      break;
    }
    case StateKind::kProduct:
      rho = tensor_product(random_density(m, rng), random_density(n, rng));
      break;
    case StateKind::kRandomMixed:
      rho = random_density(m * n, rng, params.rank);
      break;
    case StateKind::kRandomPure:
      return random_pure(dims, rng).projector();
  }
  return DensityMatrix((rho + rho.adjoint()) / 2.0, dims);
}

}  // namespace vncorr
