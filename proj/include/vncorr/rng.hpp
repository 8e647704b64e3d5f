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

#ifndef VNCORR_RNG_HPP
#define VNCORR_RNG_HPP

#include <cstdint>
#include <random>

#include "vncorr/common.hpp"

namespace vncorr {

inline constexpr std::uint64_t kDefaultSeed = 20120731;

/// Seeded pseudo-random stream. Parallel tasks never share a stream; each
/// derives its own with `substream(master, counter)`, so results depend only
/// on (master, counter) and not on how tasks are scheduled.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = kDefaultSeed) : engine_(mix(seed)) {}

  static RngStream substream(std::uint64_t master, std::uint64_t counter) {
    std::seed_seq seq{static_cast<std::uint32_t>(master),
                      static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(counter),
                      static_cast<std::uint32_t>(counter >> 32), 0x9e3779b9u};
    RngStream s;
    s.engine_.seed(seq);
    return s;
  }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_normal() {
    // unit variance in total: E|z|^2 = 1
    constexpr double kScale = 0.70710678118654752440;
    const double re = normal();
    const double im = normal();
    return {kScale * re, kScale * im};
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace vncorr

#endif  // VNCORR_RNG_HPP
