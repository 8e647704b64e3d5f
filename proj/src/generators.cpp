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

#include "vncorr/generators.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace vncorr {

GeneratorBasis::GeneratorBasis(int d) : d_(d) {
  if (d < 1) throw InvalidInput("generator basis dimension must be >= 1");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ops_.reserve(static_cast<std::size_t>(d) * d);
  ops_.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix s = Matrix::Zero(d, d);
      s(j, k) = s(k, j) = inv_sqrt2;
      ops_.push_back(std::move(s));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix a = Matrix::Zero(d, d);
      a(j, k) = Complex(0.0, -inv_sqrt2);
      a(k, j) = Complex(0.0, inv_sqrt2);
      ops_.push_back(std::move(a));
    }
  }
  for (int l = 1; l < d; ++l) {
    Matrix z = Matrix::Zero(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) z(j, j) = scale;
    z(l, l) = -l * scale;
    ops_.push_back(std::move(z));
  }
}

RealVector GeneratorBasis::coordinates(const Matrix& h) const {
  RealVector c(size());
  for (int i = 0; i < size(); ++i) {
    // tr(X h) = sum_ab X_ab h_ba
    c(i) = ops_[static_cast<std::size_t>(i)].cwiseProduct(h.transpose()).sum().real();
  }
  return c;
}

Matrix GeneratorBasis::combine(const RealVector& c) const {
  if (c.size() != size()) throw InvalidInput("generator coordinate vector has wrong length");
  Matrix h = Matrix::Zero(d_, d_);
  for (int i = 0; i < size(); ++i) h += c(i) * ops_[static_cast<std::size_t>(i)];
  return h;
}

const GeneratorBasis& generator_basis(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GeneratorBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<GeneratorBasis>(d);
  return *slot;
}

}  // namespace vncorr
