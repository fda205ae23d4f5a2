// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace robustid {

// Sub-stream tags. A trial seed is split into one independent stream per role
// so that changing, say, the noise model leaves the input and outlier draws of
// the same trial untouched.
enum class StreamRole : std::uint64_t {
  kInput = 1,
  kParameter = 2,
  kOutliers = 3,
  kNoise = 4,
  kSphere = 5,
  kMagnitude = 6,
};

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t mix64(std::uint64_t x);

// Deterministic child seed: mix64(parent ^ mix64(tag + golden gamma)).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag);
std::uint64_t derive_seed(std::uint64_t parent, StreamRole role);

// Portable random stream. The engine is std::mt19937_64, whose output sequence
// is fixed by the standard; all variate transforms are implemented here instead
// of using <random> distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // 53-bit uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1).
  double uniform_open() {
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Unbiased integer in [0, bound), bound > 0 (rejection on the top range).
  std::uint64_t below(std::uint64_t bound);

  // Standard normal via the Box-Muller transform; the second variate of each
  // pair is cached.
  double gaussian();

  // Gamma(shape, 1) via Marsaglia & Tsang (2000) squeeze/rejection; shape < 1
  // uses the boost Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape);

  // Exponential with the given mean, by inversion.
  double exponential(double mean);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace robustid
