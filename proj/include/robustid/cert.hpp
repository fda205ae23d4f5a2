// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Outlier-support certification. A support K is correctable by l1 fitting
// exactly when ||(Hz)_K||_1 < ||(Hz)_Kbar||_1 for every z != 0 (the balance
// condition). Support indices are 0-based throughout this header.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "robustid/linalg.hpp"
#include "robustid/matgen.hpp"

namespace robustid {

enum class Verdict { kCertified, kFalsified, kUnfalsified };

std::string_view verdict_name(Verdict v);

struct SupportCert {
  std::vector<std::size_t> support;
  Verdict verdict = Verdict::kUnfalsified;
  // Smallest 1 - ||(Hz)_K||_1 / ||(Hz)_Kbar||_1 over the directions examined;
  // -inf when some z has (Hz)_Kbar = 0 but (Hz)_K != 0.
  double worst_gap = 0.0;
  // Present iff verdict == kFalsified; unit 2-norm.
  std::optional<std::vector<double>> witness;
  std::size_t problems_solved = 0;
};

// ||(Hz)_Kbar||_1 - ||(Hz)_K||_1. DomainError for z == 0, DimensionError for
// out-of-range or repeated indices.
double balance_gap(const Matrix& h, std::span<const std::size_t> support,
                   std::span<const double> z);

struct ExactCertOptions {
  std::size_t max_support = 20;
  // Certified only if every pattern optimum is below 1 - margin.
  double margin = 1e-8;
};

// Exact check by sign-pattern enumeration: for each sigma in {+-1}^|K| (up to
// global sign) solve
//   maximize sigma^T (Hz)_K  subject to  ||(Hz)_Kbar||_1 <= 1
// as an LP. The balance condition holds iff every optimum is < 1.
// SizeError when |K| exceeds options.max_support; SingularSystemError when H
// is rank deficient.
SupportCert certify_support_exact(const Matrix& h, std::span<const std::size_t> support,
                                  const ExactCertOptions& options = {});

// Randomized falsifier: tests `trials` uniform directions on the unit sphere.
// Never certifies.
SupportCert certify_support_mc(const Matrix& h, std::span<const std::size_t> support,
                               std::size_t trials, std::uint64_t seed);

// Fraction of trials in which LAD recovers a standard Gaussian x to 1e-6
// relative error from y = H x + e, e supported on K with i.i.d. magnitudes.
double empirical_recovery_rate(const Matrix& h, std::span<const std::size_t> support,
                               std::size_t trials, const GaussianMagnitude& magnitude,
                               std::uint64_t seed);

struct ConcentrationReport {
  std::size_t trials = 0;
  double mean = 0.0;    // of ||Hz||_1 / n across trials
  double stddev = 0.0;  // sample standard deviation across trials
  double min = 0.0;
  double max = 0.0;
  // sigma * sqrt(2/pi) for Gaussian inputs; NaN for Bernoulli inputs.
  double expected = 0.0;
  double relative_deviation = 0.0;  // |mean - expected| / expected, NaN if no expectation
  // Per-row bounds on E|<z, h>| for Bernoulli inputs; (NaN, NaN) otherwise.
  std::pair<double, double> bounds{0.0, 0.0};
};

// ||Hz||_1 / n over fresh Toeplitz draws. DomainError unless ||z||_2 = 1
// (to 1e-9).
ConcentrationReport concentration_diagnostic(std::size_t n, std::size_t m,
                                             std::span<const double> z, std::size_t trials,
                                             std::uint64_t seed,
                                             const InputDistribution& input = GaussianInput{});

// E|l + tX| - |l| for X ~ N(0, 1):
//   sqrt(2/pi) t exp(-l^2 / (2 t^2)) - 2 |l| (1 - Phi(|l| / t)).
// DomainError for t <= 0.
double expected_gain(double l, double t);

}  // namespace robustid
