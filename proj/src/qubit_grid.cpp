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

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "vncorr/correlator.hpp"

namespace vncorr {

namespace {

using std::numbers::pi;

struct Direction {
  double theta;
  double phi;
  std::array<double, 3> n;
};

Direction make_direction(double theta, double phi) {
  return {theta, phi, {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)}};
}

// Columns |n+>, |n->.
Matrix qubit_basis(double theta, double phi) {
  Matrix u(2, 2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  u(0, 0) = c;
  u(1, 0) = std::polar(s, phi);
  u(0, 1) = -std::polar(s, -phi);
  u(1, 1) = c;
  return u;
}

// Upper hemisphere; antipodal directions give the same projector pair.
std::vector<Direction> hemisphere_grid(int resolution) {
  std::vector<Direction> grid;
  grid.push_back(make_direction(0.0, 0.0));
  for (int k = 1; k <= resolution; ++k) {
    const double theta = k * (pi / 2.0) / resolution;
    for (int l = 0; l < 2 * resolution; ++l) grid.push_back(make_direction(theta, l * pi / resolution));
  }
  return grid;
}

double alignment(const Direction& a, const Direction& b) {
  return std::abs(a.n[0] * b.n[0] + a.n[1] * b.n[1] + a.n[2] * b.n[2]);
}

// Maximizes `score` from `start` by a coordinate compass search with step
// halving.
std::vector<double> compass_search(const std::function<double(const std::vector<double>&)>& score,
                                   std::vector<double> start, double step, double& best) {
  best = score(start);
  int iterations = 0;
  while (step > 1e-11 && iterations < 200000) {
    bool moved = false;
    for (std::size_t c = 0; c < start.size(); ++c) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> trial = start;
        trial[c] += sign * step;
        const double value = score(trial);
        ++iterations;
        if (value > best) {
          best = value;
          start = std::move(trial);
          moved = true;
        }
      }
    }
    if (!moved) step /= 2.0;
  }
  return start;
}

// Indices of the highest values, greedily skipping directions within
// `min_angle` of one already picked.
std::vector<std::size_t> separated_best(const std::vector<Direction>& grid,
                                        const std::vector<double>& values, std::size_t count,
                                        double min_angle) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] > values[b]; });
  std::vector<std::size_t> picked;
  const double limit = std::cos(min_angle);
  for (std::size_t idx : order) {
    bool far = true;
    for (std::size_t p : picked) {
      if (alignment(grid[idx], grid[p]) > limit) {
        far = false;
        break;
      }
    }
    if (far) picked.push_back(idx);
    if (picked.size() == count) break;
  }
  return picked;
}

constexpr std::size_t kCandidates = 8;

}  // namespace

MinimizeResult brute_force_qubit(const DensityMatrix& rho, Which which, int resolution) {
  const int m = rho.dims().m;
  const int n = rho.dims().n;
  if (which != Which::kQ2 && m != 2) throw InvalidInput("brute_force_qubit: first side is not a qubit");
  if (which != Which::kQ1 && n != 2) throw InvalidInput("brute_force_qubit: second side is not a qubit");
  if (resolution < 2) throw InvalidInput("brute_force_qubit: resolution must be >= 2");

  const Matrix& r = rho.matrix();
  const double purity_rho = r.squaredNorm();
  const std::vector<Direction> grid = hemisphere_grid(resolution);
  const double spacing = (pi / 2.0) / resolution;

  MinimizeResult out;
  out.converged = true;

  if (which == Which::kQ1 || which == Which::kQ2) {
    // Conditional blocks <a|rho|b> of the measured qubit side.
    const int other = which == Which::kQ1 ? n : m;
    std::array<std::array<Matrix, 2>, 2> blocks;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        Matrix blk(other, other);
        for (int i = 0; i < other; ++i) {
          for (int k = 0; k < other; ++k) {
            blk(i, k) = which == Which::kQ1 ? r(a * n + i, b * n + k) : r(i * n + a, k * n + b);
          }
        }
        blocks[a][b] = std::move(blk);
      }
    }
    auto measured_purity = [&](double theta, double phi) {
      const Matrix u = qubit_basis(theta, phi);
      double total = 0.0;
      for (int col = 0; col < 2; ++col) {
        Matrix blk = Matrix::Zero(other, other);
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) blk += std::conj(u(a, col)) * u(b, col) * blocks[a][b];
        }
        total += blk.squaredNorm();
      }
      return total;
    };

    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = measured_purity(grid[i].theta, grid[i].phi);
    const auto candidates = separated_best(grid, values, kCandidates, 3.0 * spacing);

    double best = -1.0;
    std::vector<double> best_x;
    for (std::size_t idx : candidates) {
      double value = 0.0;
      auto x = compass_search([&](const std::vector<double>& p) { return measured_purity(p[0], p[1]); },
                              {grid[idx].theta, grid[idx].phi}, spacing, value);
      if (value > best) {
        best = value;
        best_x = std::move(x);
      }
    }
    out.evaluations += static_cast<long>(grid.size());
    out.value = std::max(0.0, purity_rho - best);
    ProjectiveBasis basis(qubit_basis(best_x[0], best_x[1]));
    if (which == Which::kQ1) {
      out.basis1 = std::move(basis);
    } else {
      out.basis2 = std::move(basis);
    }
    return out;
  }

  // Two qubits: sum over outcomes of p(+-,+-)^2 = (1 + (a.r)^2 + (b.s)^2 + (a.T.b)^2) / 4.
  const std::array<Matrix, 3> pauli = [] {
    Matrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, Complex(0, -1), Complex(0, 1), 0;
    z << 1, 0, 0, -1;
    return std::array<Matrix, 3>{x, y, z};
  }();
  const Matrix id = Matrix::Identity(2, 2);
  std::array<double, 3> rv{}, sv{};
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i) {
    rv[i] = (r * tensor_product(pauli[i], id)).trace().real();
    sv[i] = (r * tensor_product(id, pauli[i])).trace().real();
    for (int j = 0; j < 3; ++j) t[i][j] = (r * tensor_product(pauli[i], pauli[j])).trace().real();
  }
  auto joint_purity = [&](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    double ar = 0.0, bs = 0.0, atb = 0.0;
    for (int i = 0; i < 3; ++i) {
      ar += a[i] * rv[i];
      bs += b[i] * sv[i];
      for (int j = 0; j < 3; ++j) atb += a[i] * t[i][j] * b[j];
    }
    return 0.25 * (1.0 + ar * ar + bs * bs + atb * atb);
  };

  std::vector<double> best_for_a(grid.size());
  std::vector<std::size_t> best_b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& a = grid[i].n;
    double ar = 0.0;
    std::array<double, 3> ta{};
    for (int k = 0; k < 3; ++k) {
      ar += a[k] * rv[k];
      for (int j = 0; j < 3; ++j) ta[j] += a[k] * t[k][j];
    }
    double top = -1.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto& b = grid[j].n;
      const double bs = b[0] * sv[0] + b[1] * sv[1] + b[2] * sv[2];
      const double atb = ta[0] * b[0] + ta[1] * b[1] + ta[2] * b[2];
      const double v = bs * bs + atb * atb;
      if (v > top) {
        top = v;
        best_b[i] = j;
      }
    }
    best_for_a[i] = 0.25 * (1.0 + ar * ar + top);
  }
  const auto candidates = separated_best(grid, best_for_a, kCandidates, 3.0 * spacing);

  double best = -1.0;
  std::vector<double> best_x;
  for (std::size_t idx : candidates) {
    const Direction& b0 = grid[best_b[idx]];
    double value = 0.0;
    auto x = compass_search(
        [&](const std::vector<double>& p) {
          return joint_purity(make_direction(p[0], p[1]).n, make_direction(p[2], p[3]).n);
        },
        {grid[idx].theta, grid[idx].phi, b0.theta, b0.phi}, spacing, value);
    if (value > best) {
      best = value;
      best_x = std::move(x);
    }
  }
  out.evaluations = static_cast<long>(grid.size() * grid.size());
  out.value = std::max(0.0, purity_rho - best);
  out.basis1 = ProjectiveBasis(qubit_basis(best_x[0], best_x[1]));
  out.basis2 = ProjectiveBasis(qubit_basis(best_x[2], best_x[3]));
  return out;
}

}  // namespace vncorr
