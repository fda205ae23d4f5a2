// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/special.hpp"

#include <cmath>
#include <numbers>

#include "robustid/error.hpp"

namespace robustid {
namespace {

// Mills ratio (1 - Phi(t)) / phi(t) for t > 0 by the continued fraction
//   R(t) = 1 / (t + 1 / (t + 2 / (t + 3 / (t + ...)))),
// evaluated with the modified Lentz algorithm.
double mills_ratio(double t) {
  constexpr double kTiny = 1e-300;
  double f = t;
  double c = t;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    d = t + k * d;
    if (d == 0.0) d = kTiny;
    c = t + k / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

}  // namespace

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

double log_normal_tail(double t) {
  if (std::isnan(t)) return t;
  if (t < 5.0) return std::log(0.5 * std::erfc(t / std::numbers::sqrt2));
  const double log_pdf = -0.5 * t * t - 0.5 * std::log(2.0 * std::numbers::pi);
  return log_pdf + std::log(mills_ratio(t));
}

double log_normal_cdf(double t) { return log_normal_tail(-t); }

double entropy(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("entropy: beta must lie in [0, 1]");
  if (beta == 0.0 || beta == 1.0) return 0.0;
  return -beta * std::log(beta) - (1.0 - beta) * std::log1p(-beta);
}

}  // namespace robustid
