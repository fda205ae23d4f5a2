// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Input sequences, the structured regressor matrix, and the noise/outlier
// samplers of the observation model y = H x + e + w.
//
// Every sampler is a pure function of (spec, dimensions, seed).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "robustid/linalg.hpp"
#include "robustid/rng.hpp"

namespace robustid {

struct GaussianInput {
  double sigma = 1.0;
};
// i.i.d. +1/-1 with equal probability (PRBS-style excitation).
struct BernoulliInput {};
using InputDistribution = std::variant<GaussianInput, BernoulliInput>;

std::string_view input_kind_name(const InputDistribution& dist);

// Samples h_i for logical indices -m+2 ... n, stored at values[i + m - 2].
struct InputSequence {
  std::vector<double> values;
  InputDistribution dist;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;

  // Logical index in [-m+2, n].
  double at(long index) const;
};

InputSequence sample_input(const InputDistribution& dist, std::size_t n, std::size_t m,
                           std::uint64_t seed);

// n x m matrix with entries[i][j] = h[i + j - m] (1-based i, j), i.e. constant
// along anti-diagonals. Row 1 reads (h_{-m+2}, ..., h_1), row n reads
// (h_{n-m+1}, ..., h_n).
class RegressorMatrix {
 public:
  std::size_t n() const { return entries_.rows(); }
  std::size_t m() const { return entries_.cols(); }
  const Matrix& entries() const { return entries_; }
  // The n + m - 1 generating samples, in logical-index order.
  std::span<const double> source() const { return source_; }

  // H z through the structured kernel, without touching the dense entries.
  std::vector<double> times(std::span<const double> z) const;

  friend RegressorMatrix build_regressor(std::span<const double> h, std::size_t n,
                                         std::size_t m);

 private:
  Matrix entries_;
  std::vector<double> source_;
};

RegressorMatrix build_regressor(std::span<const double> h, std::size_t n, std::size_t m);
inline RegressorMatrix build_regressor(const InputSequence& h, std::size_t n, std::size_t m) {
  return build_regressor(std::span<const double>(h.values), n, m);
}

struct NoNoise {};
struct GaussianNoise {
  double sigma = 1.0;
};
struct GammaNoise {
  double shape = 2.0;
  double scale = 1.0;
};
struct ExponentialNoise {
  double mean = 1.0;
};
using NoiseKind = std::variant<NoNoise, GaussianNoise, GammaNoise, ExponentialNoise>;

struct NoiseSpec {
  NoiseKind kind;
  std::uint64_t seed = 0;
};

std::string_view noise_kind_name(const NoiseKind& kind);

// E[w^2] of a single noise sample, in closed form.
double noise_second_moment(const NoiseKind& kind);

// Zero-mean Gaussian, Gamma(shape, scale), or exponential(mean); samples are
// not re-centred.
std::vector<double> sample_noise(const NoiseSpec& spec, std::size_t n);

struct FixedCount {
  std::size_t k = 0;
};
// k = round_half_up(fraction * n). Lets one template serve a whole n grid.
struct FixedFraction {
  double fraction = 0.0;
};
// k = round_half_up(U * max_fraction * n), U ~ uniform[0, 1].
struct UniformFraction {
  double max_fraction = 0.0;
};
using CountModel = std::variant<FixedCount, FixedFraction, UniformFraction>;

// Outlier magnitudes ~ N(mean, sd^2).
struct GaussianMagnitude {
  double mean = 0.0;
  double sd = 1.0;
};

struct OutlierSpec {
  CountModel count;
  GaussianMagnitude magnitude;
  std::uint64_t seed = 0;
};

struct OutlierDraw {
  std::vector<double> values;        // length n, zero off support
  std::vector<std::size_t> support;  // 0-based, ascending
};

OutlierDraw draw_outliers(const OutlierSpec& spec, std::size_t n);
std::vector<double> sample_outliers(const OutlierSpec& spec, std::size_t n);

// Uniform k-subset of {0, ..., n-1}, ascending.
std::vector<std::size_t> sample_support(Rng& rng, std::size_t n, std::size_t k);

// Uniform direction on the unit sphere in R^m (normalized Gaussian vector).
std::vector<double> sample_unit_vector(Rng& rng, std::size_t m);

}  // namespace robustid
