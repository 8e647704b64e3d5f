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

#ifndef VNCORR_COMMON_HPP
#define VNCORR_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace vncorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical meaning of "equal" shared by the library, tests and CLI.
struct Tolerances {
  double hermitian = 1e-10;        // max |rho - rho^dagger|
  double trace = 1e-10;            // |tr rho - 1|
  double psd = 1e-10;              // smallest eigenvalue >= -psd
  double pure_norm = 1e-12;        // stored pure-state norm deviation
  double pure_norm_reject = 1e-8;  // larger deviations are rejected
  double basis = 1e-10;            // orthonormality / completeness
  double probability = 1e-12;      // |sum p - 1|
  double schmidt_sum = 1e-10;      // |sum lambda^2 - 1|
};

inline constexpr Tolerances kTolerances{};

/// Malformed or inconsistent input (shape mismatch, missing argument, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value failed one of its type invariants; `invariant()` names which one.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace vncorr

#endif  // VNCORR_COMMON_HPP
