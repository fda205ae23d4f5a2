// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "robustid/error.hpp"
#include "robustid/special.hpp"

namespace robustid {
namespace {

// Beta-independent pieces of the exponent on a fixed (mu, delta) grid:
//   lhs = H(beta) + beta * (m * a - b) + b / (2m - 1)
// with a = log 2 + m mu^2/2 + log Phi(mu sqrt m) and
//      b = log 2 + mu^2 (1 - delta)^2 / 2 + log(1 - Phi(mu (1 - delta))).
struct ExponentTable {
  std::vector<double> mu, delta;  // per node
  std::vector<double> slope;      // m * a - b
  std::vector<double> intercept;  // b / (2m - 1)

  ExponentTable(int m, const ThresholdGrid& g) {
    const double md = static_cast<double>(m);
    const double cm = 1.0 / (2.0 * md - 1.0);
    for (std::size_t i = 0; i < g.mu_points; ++i) {
      const double frac = g.mu_points > 1 ? static_cast<double>(i) / (g.mu_points - 1) : 0.0;
      const double mu = g.mu_min * std::pow(g.mu_max / g.mu_min, frac);
      const double a = std::numbers::ln2 + md * mu * mu / 2.0 + log_normal_cdf(mu * std::sqrt(md));
      for (std::size_t k = 0; k < g.delta_points; ++k) {
        const double delta =
            g.delta_points > 1
                ? g.delta_min + (g.delta_max - g.delta_min) * static_cast<double>(k) /
                                    (g.delta_points - 1)
                : g.delta_min;
        const double s = mu * (1.0 - delta);
        const double b = std::numbers::ln2 + s * s / 2.0 + log_normal_tail(s);
        this->mu.push_back(mu);
        this->delta.push_back(delta);
        slope.push_back(md * a - b);
        intercept.push_back(b * cm);
      }
    }
  }

  // (min over nodes of the exponent at beta, argmin node)
  std::pair<double, std::size_t> minimum(double beta) const {
    double best = INFINITY;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < slope.size(); ++i) {
      const double v = beta * slope[i] + intercept[i];
      if (v < best) {
        best = v;
        arg = i;
      }
    }
    return {best + entropy(beta), arg};
  }
};

}  // namespace

double threshold_lhs(double beta, int m, double mu, double delta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("threshold_lhs: beta must lie in (0, 1)");
  if (m < 1) throw DomainError("threshold_lhs: m must be >= 1");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("threshold_lhs: mu must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("threshold_lhs: delta must lie in (0, 1)");
  const double md = static_cast<double>(m);
  const double s = mu * (1.0 - delta);
  return entropy(beta) +
         md * beta * (std::numbers::ln2 + md * mu * mu / 2.0 + log_normal_cdf(mu * std::sqrt(md))) +
         (1.0 / (2.0 * md - 1.0) - beta) *
             (std::numbers::ln2 + 0.5 * s * s + log_normal_tail(s));
}

ThresholdGrid ThresholdGrid::refined() const {
  ThresholdGrid g = *this;
  g.mu_points = 2 * mu_points - 1;
  g.delta_points = 2 * delta_points - 1;
  return g;
}

ThresholdResult strong_threshold(int m, const ThresholdGrid& grid) {
  if (m < 1 || m > 50) throw DomainError("strong_threshold: m must lie in [1, 50]");
  if (grid.mu_points < 1 || grid.delta_points < 1 || grid.beta_points < 2 ||
      !(grid.beta_min > 0.0 && grid.beta_min < grid.beta_max && grid.beta_max < 1.0)) {
    throw DomainError("strong_threshold: malformed grid");
  }
  const ExponentTable table(m, grid);
  ThresholdResult res;
  res.m = m;
  res.grid = grid;

  auto at_index = [&](std::size_t i) {
    const double frac = static_cast<double>(i) / (grid.beta_points - 1);
    return grid.beta_min * std::pow(grid.beta_max / grid.beta_min, frac);
  };
  // Largest bracketing node with a negative exponent.
  std::size_t top = grid.beta_points;
  for (std::size_t i = grid.beta_points; i-- > 0;) {
    ++res.evaluations;
    if (table.minimum(at_index(i)).first < 0.0) {
      top = i;
      break;
    }
  }
  if (top == grid.beta_points) {
    throw SearchFailure("strong_threshold: exponent never negative for m = " + std::to_string(m));
  }
  double lo = at_index(top);
  double hi = top + 1 < grid.beta_points ? at_index(top + 1) : grid.beta_max;
  if (top + 1 == grid.beta_points) hi = lo;
  while (hi - lo > grid.beta_tol) {
    const double mid = 0.5 * (lo + hi);
    ++res.evaluations;
    if (table.minimum(mid).first < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const auto [value, arg] = table.minimum(lo);
  (void)value;
  res.beta_star = lo;
  res.mu = table.mu[arg];
  res.delta = table.delta[arg];
  res.lhs_value = threshold_lhs(lo, m, res.mu, res.delta);
  return res;
}

std::pair<double, double> bernoulli_s_bounds(int m) {
  if (m < 1) throw DomainError("bernoulli_s_bounds: m must be >= 1");
  const double r = std::sqrt(static_cast<double>(m));
  return {1.0 / (2.0 * r), r};
}

}  // namespace robustid
