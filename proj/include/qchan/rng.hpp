// Copyright 2026 The qchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qchan {

/// Seedable random stream. A stream is identified by (seed, stream index);
/// the same pair always reproduces the same sample sequence, and distinct
/// stream indices give statistically independent streams. All variates are
/// produced by fully specified generators (mt19937_64 plus our own
/// transformations), so sequences are identical across platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform();

  /// Standard normal (Box-Muller; second variate is cached).
  double normal();

  /// Standard complex normal, E|z|^2 = 1: (x + iy)/sqrt(2).
  std::complex<double> cnormal();

  /// Gamma(shape, 1) via Marsaglia-Tsang; valid for all shape > 0.
  double gamma(double shape);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t stream_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace qchan
