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

#ifndef VNCORR_NELDER_MEAD_HPP
#define VNCORR_NELDER_MEAD_HPP

#include <functional>

#include "vncorr/common.hpp"

namespace vncorr {

struct NelderMeadOptions {
  int max_evaluations = 4000;
  double f_tolerance = 1e-12;  // spread of simplex values
  double x_tolerance = 1e-8;   // max vertex distance from the best vertex
  double initial_step = 0.5;
};

struct NelderMeadResult {
  RealVector x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization with dimension-adaptive coefficients.
NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& objective,
                             const RealVector& start, const NelderMeadOptions& options = {});

}  // namespace vncorr

#endif  // VNCORR_NELDER_MEAD_HPP
