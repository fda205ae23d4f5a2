// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference computations shared by the unit and acceptance
// tests. They deliberately avoid the library's LP code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "robustid/linalg.hpp"

namespace robustid::oracle {

inline double l1_residual(const Matrix& h, const std::vector<double>& y,
                          const std::vector<double>& x) {
  const auto hx = h.times(x);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += std::fabs(y[i] - hx[i]);
  return s;
}

// min ||y - Hx||_1 over the exact fits of every nonsingular m-row subset.
inline double lad_vertex_min(const Matrix& h, const std::vector<double>& y) {
  const std::size_t n = h.rows(), m = h.cols();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    const Matrix sub = h.select_rows(idx);
    if (has_full_column_rank(sub)) {
      std::vector<double> ys(m);
      for (std::size_t i = 0; i < m; ++i) ys[i] = y[idx[i]];
      best = std::min(best, l1_residual(h, y, solve_square(sub, ys)));
    }
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

// max over unit z of ||(Hz)_K||_1 / ||(Hz)_Kbar||_1 for m <= 2 (inf when the
// off-support part can vanish while the support part does not).
//
// The ratio is a quotient of functions that are linear on each cone between
// consecutive zero-crossing directions of the rows, so its supremum over the
// circle is attained on those directions; a dense angular grid is scanned as
// well.
inline double balance_ratio_max(const Matrix& h, const std::vector<bool>& in_support,
                                std::size_t grid = 10000) {
  const std::size_t n = h.rows(), m = h.cols();
  auto ratio = [&](const std::vector<double>& z) {
    const auto hz = h.times(z);
    double in = 0.0, off = 0.0;
    for (std::size_t i = 0; i < n; ++i) (in_support[i] ? in : off) += std::fabs(hz[i]);
    if (off > 1e-14 * (in + off)) return in / off;
    return in > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  };
  if (m == 1) return ratio({1.0});
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = h(i, 0), b = h(i, 1);
    if (a == 0.0 && b == 0.0) continue;
    best = std::max(best, ratio({-b, a}));
  }
  for (std::size_t k = 0; k < grid; ++k) {
    const double th = std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
    best = std::max(best, ratio({std::cos(th), std::sin(th)}));
  }
  return best;
}

// E|l + tX| - |l| for X ~ N(0, 1) by composite Simpson quadrature, split at
// the kink x = -l/t and truncated at |x| = 14.
inline double expected_gain_quadrature(double l, double t, std::size_t panels = 20000) {
  const double kink = -l / t;
  auto f = [&](double x) {
    return (std::fabs(l + t * x) - std::fabs(l)) * std::exp(-0.5 * x * x) /
           std::sqrt(2.0 * std::numbers::pi);
  };
  auto simpson = [&](double a, double b) {
    if (b <= a) return 0.0;
    const double hh = (b - a) / static_cast<double>(panels);
    double s = f(a) + f(b);
    for (std::size_t k = 1; k < panels; ++k) s += f(a + hh * static_cast<double>(k)) * (k % 2 ? 4.0 : 2.0);
    return s * hh / 3.0;
  };
  const double lo = -14.0, hi = 14.0;
  const double mid = std::clamp(kink, lo, hi);
  return simpson(lo, mid) + simpson(mid, hi);
}

}  // namespace robustid::oracle
