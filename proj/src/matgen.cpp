// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/matgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "robustid/error.hpp"
#include "robustid/kernels.hpp"

namespace robustid {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::size_t round_half_up(double v) { return static_cast<std::size_t>(std::floor(v + 0.5)); }

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw SpecError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

std::string_view input_kind_name(const InputDistribution& dist) {
  return std::visit(Overloaded{[](const GaussianInput&) { return std::string_view("gaussian"); },
                               [](const BernoulliInput&) { return std::string_view("bernoulli"); }},
                    dist);
}

double InputSequence::at(long index) const {
  const long offset = index + static_cast<long>(m) - 2;
  if (offset < 0 || offset >= static_cast<long>(values.size())) {
    throw DimensionError("InputSequence::at: index out of range");
  }
  return values[static_cast<std::size_t>(offset)];
}

InputSequence sample_input(const InputDistribution& dist, std::size_t n, std::size_t m,
                           std::uint64_t seed) {
  if (m < 1 || n < m) throw DimensionError("sample_input: need n >= m >= 1");
  InputSequence out{{}, dist, seed, n, m};
  out.values.resize(n + m - 1);
  Rng rng(seed);
  std::visit(Overloaded{[&](const GaussianInput& g) {
                          require_positive(g.sigma, "input sigma");
                          for (double& v : out.values) v = g.sigma * rng.gaussian();
                        },
                        [&](const BernoulliInput&) {
                          for (double& v : out.values) v = (rng.next_u64() >> 63) ? 1.0 : -1.0;
                        }},
             dist);
  return out;
}

std::vector<double> RegressorMatrix::times(std::span<const double> z) const {
  if (z.size() != m()) throw DimensionError("RegressorMatrix::times: size mismatch");
  std::vector<double> out(n());
  kernels::hankel_matvec(source_, n(), m(), z, out);
  return out;
}

RegressorMatrix build_regressor(std::span<const double> h, std::size_t n, std::size_t m) {
  if (m < 1 || n < 1) throw DimensionError("build_regressor: empty dimensions");
  if (h.size() != n + m - 1) {
    throw DimensionError("build_regressor: expected n + m - 1 input samples");
  }
  RegressorMatrix out;
  out.source_.assign(h.begin(), h.end());
  out.entries_ = Matrix(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    std::copy_n(h.begin() + static_cast<std::ptrdiff_t>(c), n, out.entries_.col(c).begin());
  }
  return out;
}

std::string_view noise_kind_name(const NoiseKind& kind) {
  return std::visit(
      Overloaded{[](const NoNoise&) { return std::string_view("none"); },
                 [](const GaussianNoise&) { return std::string_view("gaussian"); },
                 [](const GammaNoise&) { return std::string_view("gamma"); },
                 [](const ExponentialNoise&) { return std::string_view("exponential"); }},
      kind);
}

double noise_second_moment(const NoiseKind& kind) {
  return std::visit(
      Overloaded{[](const NoNoise&) { return 0.0; },
                 [](const GaussianNoise& g) { return g.sigma * g.sigma; },
                 // var + mean^2 = k theta^2 + (k theta)^2
                 [](const GammaNoise& g) {
                   return g.shape * g.scale * g.scale + (g.shape * g.scale) * (g.shape * g.scale);
                 },
                 [](const ExponentialNoise& e) { return 2.0 * e.mean * e.mean; }},
      kind);
}

std::vector<double> sample_noise(const NoiseSpec& spec, std::size_t n) {
  std::vector<double> w(n, 0.0);
  Rng rng(spec.seed);
  std::visit(Overloaded{[&](const NoNoise&) {},
                        [&](const GaussianNoise& g) {
                          require_positive(g.sigma, "noise sigma");
                          for (double& v : w) v = g.sigma * rng.gaussian();
                        },
                        [&](const GammaNoise& g) {
                          require_positive(g.shape, "gamma shape");
                          require_positive(g.scale, "gamma scale");
                          for (double& v : w) v = g.scale * rng.gamma(g.shape);
                        },
                        [&](const ExponentialNoise& e) {
                          require_positive(e.mean, "exponential mean");
                          for (double& v : w) v = rng.exponential(e.mean);
                        }},
             spec.kind);
  return w;
}

std::vector<std::size_t> sample_support(Rng& rng, std::size_t n, std::size_t k) {
  if (k > n) throw SpecError("sample_support: k exceeds n");
  // Partial Fisher-Yates over the index range.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

OutlierDraw draw_outliers(const OutlierSpec& spec, std::size_t n) {
  if (!(spec.magnitude.sd >= 0.0) || !std::isfinite(spec.magnitude.sd) ||
      !std::isfinite(spec.magnitude.mean)) {
    throw SpecError("outlier magnitude: sd must be finite and >= 0");
  }
  Rng rng(spec.seed);
  const std::size_t k = std::visit(
      Overloaded{[&](const FixedCount& f) { return f.k; },
                 [&](const FixedFraction& f) {
                   if (!(f.fraction >= 0.0 && f.fraction <= 1.0)) {
                     throw SpecError("outlier fraction must lie in [0, 1]");
                   }
                   return round_half_up(f.fraction * static_cast<double>(n));
                 },
                 [&](const UniformFraction& u) {
                   if (!(u.max_fraction >= 0.0 && u.max_fraction <= 1.0)) {
                     throw SpecError("outlier max_fraction must lie in [0, 1]");
                   }
                   return round_half_up(rng.uniform() * u.max_fraction * static_cast<double>(n));
                 }},
      spec.count);
  if (k > n) throw SpecError("outlier count exceeds n");

  OutlierDraw out;
  out.support = sample_support(rng, n, k);
  out.values.assign(n, 0.0);
  for (std::size_t i : out.support) {
    double v = spec.magnitude.mean + spec.magnitude.sd * rng.gaussian();
    // A zero draw would shrink the support; it has probability zero unless sd = 0.
    if (v == 0.0) v = spec.magnitude.sd > 0 ? spec.magnitude.sd * 0x1.0p-30 : 0x1.0p-30;
    out.values[i] = v;
  }
  return out;
}

std::vector<double> sample_outliers(const OutlierSpec& spec, std::size_t n) {
  return draw_outliers(spec, n).values;
}

std::vector<double> sample_unit_vector(Rng& rng, std::size_t m) {
  std::vector<double> z(m);
  double norm = 0.0;
  do {
    for (double& v : z) v = rng.gaussian();
    norm = norm2(z);
  } while (norm == 0.0);
  for (double& v : z) v /= norm;
  return z;
}

}  // namespace robustid
