// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Strong recovery threshold for Gaussian Toeplitz regressors: the largest
// outlier fraction beta for which some (mu, delta) makes the Chernoff/entropy
// exponent negative.

#include <cstddef>
#include <utility>

namespace robustid {

// H(beta) + m beta [log 2 + m mu^2 / 2 + log Phi(mu sqrt m)]
//   + (1/(2m - 1) - beta) [log 2 + mu^2 (1 - delta)^2 / 2 + log(1 - Phi(mu (1 - delta)))]
// Natural logarithms. DomainError unless 0 < beta < 1, m >= 1, mu > 0,
// 0 < delta < 1.
double threshold_lhs(double beta, int m, double mu, double delta);

struct ThresholdGrid {
  double mu_min = 1e-2;
  double mu_max = 1e2;
  std::size_t mu_points = 200;  // logarithmic
  double delta_min = 0.01;
  double delta_max = 0.99;
  std::size_t delta_points = 99;  // uniform
  double beta_min = 1e-9;
  double beta_max = 0.999;
  std::size_t beta_points = 400;  // logarithmic bracketing grid
  double beta_tol = 1e-6;         // bisection width

  // Doubles the (mu, delta) resolution while keeping every existing node.
  ThresholdGrid refined() const;
};

struct ThresholdResult {
  int m = 0;
  double beta_star = 0.0;
  double mu = 0.0;
  double delta = 0.0;
  double lhs_value = 0.0;  // threshold_lhs(beta_star, m, mu, delta) < 0
  ThresholdGrid grid;
  std::size_t evaluations = 0;
};

// SearchFailure if no grid point yields a negative exponent. Valid for
// 1 <= m <= 50.
ThresholdResult strong_threshold(int m, const ThresholdGrid& grid = {});

// Bounds (1/(2 sqrt m), sqrt m) on E|<z, h>| for unit z and i.i.d. +-1 entries.
std::pair<double, double> bernoulli_s_bounds(int m);

}  // namespace robustid
