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

#include "vncorr/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace vncorr {

NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& objective,
                             const RealVector& start, const NelderMeadOptions& options) {
  const auto dim = start.size();
  NelderMeadResult result;
  if (dim == 0) {
    result.x = start;
    result.value = objective(start);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  // Gao & Han adaptive coefficients; the classic (1, 2, 0.5, 0.5) for dim 2.
  const double n = static_cast<double>(dim);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / n;
  const double contract = 0.75 - 1.0 / (2.0 * n);
  const double shrink = 1.0 - 1.0 / n;

  int evals = 0;
  auto eval = [&](const RealVector& x) {
    ++evals;
    return objective(x);
  };

  std::vector<RealVector> simplex(static_cast<std::size_t>(dim + 1), start);
  std::vector<double> values(simplex.size());
  for (Eigen::Index i = 0; i < dim; ++i) simplex[static_cast<std::size_t>(i + 1)](i) += options.initial_step;
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  bool converged = false;
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double spread = values[worst] - values[best];
    double size = 0.0;
    for (const auto& v : simplex) size = std::max(size, (v - simplex[best]).cwiseAbs().maxCoeff());
    if (spread <= options.f_tolerance && size <= options.x_tolerance) {
      converged = true;
      break;
    }

    RealVector centroid = RealVector::Zero(dim);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) centroid += simplex[order[i]];
    centroid /= n;

    const RealVector xr = centroid + reflect * (centroid - simplex[worst]);
    const double fr = eval(xr);
    if (fr < values[best]) {
      const RealVector xe = centroid + expand * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        values[worst] = fe;
      } else {
        simplex[worst] = xr;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = xr;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const RealVector xc = outside ? RealVector(centroid + contract * (xr - centroid))
                                  : RealVector(centroid + contract * (simplex[worst] - centroid));
    const double fc = eval(xc);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = xc;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + shrink * (simplex[i] - simplex[best]);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best_index = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best_index];
  result.value = *best_it;
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

}  // namespace vncorr
