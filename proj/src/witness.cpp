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

#include "vncorr/witness.hpp"

#include <cmath>
#include <string>

#include "vncorr/correlator.hpp"
#include "vncorr/parallel.hpp"

namespace vncorr {

namespace {

constexpr long kChunk = 256;

struct Moments {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    const long total = count + o.count;
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / static_cast<double>(total);
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) /
                     static_cast<double>(total);
    count = total;
  }
};

}  // namespace

std::string_view to_string(WitnessTarget t) {
  switch (t) {
    case WitnessTarget::kQ1:
      return "q1";
    case WitnessTarget::kQ2:
      return "q2";
    case WitnessTarget::kQ12:
      return "q12";
    case WitnessTarget::kDelta:
      break;
  }
  return "delta";
}

void WitnessConfig::validate(const BipartiteDims& dims) const {
  if (samples < 1) throw InvalidInput("witness samples must be >= 1");
  if (target != WitnessTarget::kQ2) {
    if (!basis1) throw InvalidInput("witness target " + std::string(to_string(target)) + " needs basis1");
    if (basis1->dim() != dims.m) throw InvalidInput("basis1 dimension does not match m");
  }
  if (target != WitnessTarget::kQ1) {
    if (!basis2) throw InvalidInput("witness target " + std::string(to_string(target)) + " needs basis2");
    if (basis2->dim() != dims.n) throw InvalidInput("basis2 dimension does not match n");
  }
}

double f_factor(int m, int n) {
  if (m < 2 || n < 2) throw InvalidInput("f_factor needs m, n >= 2");
  const double mm = m;
  const double nn = n;
  return (mm * mm * nn - nn) / (mm * mm * nn * nn - 1.0);
}

Matrix difference_operator(const DensityMatrix& rho, WitnessTarget target,
                           const std::optional<ProjectiveBasis>& basis1,
                           const std::optional<ProjectiveBasis>& basis2) {
  const Matrix& r = rho.matrix();
  const BipartiteDims& dims = rho.dims();
  const Matrix* u1 = basis1 ? &basis1->vectors() : nullptr;
  const Matrix* u2 = basis2 ? &basis2->vectors() : nullptr;
  switch (target) {
    case WitnessTarget::kQ1:
      if (!u1) throw InvalidInput("basis1 is required");
      return r - dephase(r, dims, u1, nullptr);
    case WitnessTarget::kQ2:
      if (!u2) throw InvalidInput("basis2 is required");
      return r - dephase(r, dims, nullptr, u2);
    case WitnessTarget::kQ12:
      if (!u1 || !u2) throw InvalidInput("basis1 and basis2 are required");
      return r - dephase(r, dims, u1, u2);
    case WitnessTarget::kDelta:
      break;
  }
  if (!u1 || !u2) throw InvalidInput("basis1 and basis2 are required");
  return r - dephase(r, dims, u1, nullptr) - dephase(r, dims, nullptr, u2) + dephase(r, dims, u1, u2);
}

double witness_sample(const DensityMatrix& rho, const Matrix& difference, const Matrix& u) {
  const int d = rho.dims().total();
  if (difference.rows() != d || difference.cols() != d || u.rows() != d || u.cols() != d) {
    throw InvalidInput("witness_sample: operator sizes do not match the state");
  }
  const Matrix evolved = u * difference * u.adjoint();
  return partial_trace(evolved, rho.dims(), Subsystem::kFirst).squaredNorm();
}

WitnessEstimate estimate(const DensityMatrix& rho, const WitnessConfig& cfg) {
  const BipartiteDims& dims = rho.dims();
  cfg.validate(dims);
  const Matrix difference = difference_operator(rho, cfg.target, cfg.basis1, cfg.basis2);
  const long chunks = (cfg.samples + kChunk - 1) / kChunk;

  const auto partial = parallel_map(static_cast<std::size_t>(chunks), cfg.workers, [&](std::size_t c) {
    RngStream rng = RngStream::substream(cfg.seed, c);
    const long begin = static_cast<long>(c) * kChunk;
    const long end = std::min(cfg.samples, begin + kChunk);
    Moments mom;
    for (long s = begin; s < end; ++s) {
      mom.add(witness_sample(rho, difference, haar_unitary(dims.total(), rng)));
    }
    return mom;
  });
  Moments total;
  for (const Moments& mom : partial) total.merge(mom);

  WitnessEstimate out;
  out.samples = total.count;
  out.mean = total.mean;
  const double variance = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  out.std_error = std::sqrt(variance / static_cast<double>(total.count));
  out.f = f_factor(dims.m, dims.n);
  out.inferred = out.mean / out.f;
  switch (cfg.target) {
    case WitnessTarget::kQ1:
      out.reference = q_fixed(rho, Which::kQ1, cfg.basis1, std::nullopt);
      break;
    case WitnessTarget::kQ2:
      out.reference = q_fixed(rho, Which::kQ2, std::nullopt, cfg.basis2);
      break;
    case WitnessTarget::kQ12:
      out.reference = q_fixed(rho, Which::kQ12, cfg.basis1, cfg.basis2);
      break;
    case WitnessTarget::kDelta:
      out.reference = delta_fixed(rho, *cfg.basis1, *cfg.basis2);
      break;
  }
  return out;
}

}  // namespace vncorr
