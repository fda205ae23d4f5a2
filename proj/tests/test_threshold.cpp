// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "robustid/error.hpp"
#include "robustid/special.hpp"
#include "robustid/threshold.hpp"

using namespace robustid;

namespace {

// 50-digit mpmath values, tests/oracles/special_values.py.
struct Ref {
  double t;
  double value;
};

constexpr std::array<Ref, 11> kCdf{{
    {-8.0, 6.2209605742717841235e-16},
    {-3.0, 0.0013498980316300945267},
    {-1.0, 0.15865525393145705141},
    {-0.5, 0.30853753872598689636},
    {0.0, 0.5},
    {0.5, 0.69146246127401310364},
    {1.0, 0.84134474606854294859},
    {2.0, 0.9772498680518207928},
    {3.0, 0.99865010196836990547},
    {5.0, 0.99999971334842812081},
    {8.0, 0.9999999999999993779},
}};

constexpr std::array<Ref, 13> kLogTail{{
    {0.0, -0.69314718055994530942},
    {0.5, -1.1759117615936186089},
    {1.0, -1.8410216450092635058},
    {2.0, -3.7831843336820319488},
    {4.99, -15.01318171768932103},
    {5.0, -15.064998393988725736},
    {5.01, -15.116911800640428857},
    {8.0, -35.013437159914549896},
    {10.0, -53.231285150512470578},
    {20.0, -203.91715537109726394},
    {26.0, -342.17850892992783169},
    {30.0, -454.32124395634319711},
    {35.0, -616.97510126192251347},
}};

// Frozen from tests/oracles/threshold_oracle.py (default grid).
constexpr std::array<double, 10> kBetaStar{
    0.16840166415728777,    0.0260310914333236,    0.010138169809661916,
    0.005292579589766075,   0.003211119650858508,  0.0021376317293880427,
    0.0015151493466952787,  0.001124399579748344,  0.0008641248510992174,
    0.0006825669625398574,
};

// Asymptotic series for log(1 - Phi(t)), accurate to ~1e-11 for t >= 15.
double log_tail_asymptotic(double t) {
  const double u = 1.0 / (t * t);
  const double series =
      1.0 - u + 3 * u * u - 15 * u * u * u + 105 * std::pow(u, 4) - 945 * std::pow(u, 5) +
      10395 * std::pow(u, 6);
  return -0.5 * t * t - std::log(t * std::sqrt(2.0 * std::numbers::pi)) + std::log(series);
}

}  // namespace

TEST_CASE("normal_cdf against high-precision values") {
  for (const auto& r : kCdf) {
    CAPTURE(r.t);
    CHECK(std::fabs(normal_cdf(r.t) - r.value) <= 1e-12);
  }
  // Relative accuracy in the lower tail as well.
  CHECK(normal_cdf(-8.0) == doctest::Approx(6.2209605742717841235e-16).epsilon(1e-12));
}

TEST_CASE("normal_cdf symmetry, monotonicity and limits") {
  double prev = 0.0;
  for (double t = -9.0; t <= 9.0; t += 0.01) {
    CHECK(std::fabs(normal_cdf(t) + normal_cdf(-t) - 1.0) <= 1e-14);
    const double v = normal_cdf(t);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(normal_cdf(-40.0) < 1e-300);
  CHECK(std::fabs(normal_cdf(40.0) - 1.0) <= 1e-15);
}

TEST_CASE("log_normal_tail against high-precision values") {
  for (const auto& r : kLogTail) {
    CAPTURE(r.t);
    CHECK(std::fabs(log_normal_tail(r.t) - r.value) <= 1e-9);
    CHECK(log_normal_tail(r.t) == doctest::Approx(r.value).epsilon(1e-13));
  }
}

TEST_CASE("log_normal_tail agrees with the asymptotic expansion") {
  for (double t = 15.0; t <= 35.0; t += 0.25) {
    CAPTURE(t);
    CHECK(std::fabs(log_normal_tail(t) - log_tail_asymptotic(t)) <= 1e-9);
  }
}

TEST_CASE("log_normal_tail is smooth across the algorithm switch") {
  const double h = 1e-6;
  const double left = (log_normal_tail(5.0) - log_normal_tail(5.0 - h)) / h;
  const double right = (log_normal_tail(5.0 + h) - log_normal_tail(5.0)) / h;
  CHECK(left == doctest::Approx(right).epsilon(1e-5));
  CHECK(std::isfinite(log_normal_tail(1000.0)));
  CHECK(log_normal_tail(-40.0) == doctest::Approx(0.0));
  CHECK(log_normal_cdf(1.0) == doctest::Approx(std::log(0.84134474606854294859)).epsilon(1e-14));
}

TEST_CASE("entropy") {
  CHECK(entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(1e-300) < 1e-296);
  for (double b = 0.01; b < 1.0; b += 0.01) {
    CHECK(entropy(b) == doctest::Approx(entropy(1.0 - b)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(entropy(-0.1), DomainError);
  CHECK_THROWS_AS(entropy(1.1), DomainError);
}

TEST_CASE("threshold_lhs is negative near beta = 0 with a good certificate") {
  CHECK(threshold_lhs(1e-6, 1, 3.0, 0.1) < 0.0);
  CHECK(threshold_lhs(1e-9, 1, 3.0, 0.1) < 0.0);
  // and positive once beta is large
  CHECK(threshold_lhs(0.45, 1, 3.0, 0.1) > 0.0);
}

TEST_CASE("threshold_lhs tends to the entropy as mu -> 0") {
  for (int m : {1, 3, 7}) {
    for (double b : {1e-4, 0.01, 0.2}) {
      CHECK(threshold_lhs(b, m, 1e-9, 0.3) == doctest::Approx(entropy(b)).epsilon(1e-8));
    }
  }
}

TEST_CASE("threshold_lhs matches a direct evaluation") {
  const double b = 0.03, mu = 1.7, d = 0.25;
  const int m = 2;
  const double direct =
      entropy(b) +
      m * b * (std::log(2.0) + m * mu * mu / 2 + std::log(normal_cdf(mu * std::sqrt(m)))) +
      (1.0 / (2 * m - 1) - b) *
          (std::log(2.0) + mu * mu * (1 - d) * (1 - d) / 2 + std::log(1 - normal_cdf(mu * (1 - d))));
  CHECK(threshold_lhs(b, m, mu, d) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("threshold_lhs is increasing in beta below one half") {
  for (int m : {1, 2, 5}) {
    for (double mu : {0.1, 1.0, 10.0}) {
      for (double d : {0.01, 0.5, 0.9}) {
        double prev = threshold_lhs(1e-6, m, mu, d);
        for (double b = 1e-3; b < 0.49; b += 1e-3) {
          const double v = threshold_lhs(b, m, mu, d);
          CHECK(v > prev);
          prev = v;
        }
      }
    }
  }
}

TEST_CASE("threshold_lhs domain checks") {
  CHECK_THROWS_AS(threshold_lhs(0.0, 1, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(threshold_lhs(1.0, 1, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(threshold_lhs(0.1, 0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(threshold_lhs(0.1, 1, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(threshold_lhs(0.1, 1, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(threshold_lhs(0.1, 1, 1.0, 1.0), DomainError);
}

TEST_CASE("strong_threshold reproduces the brute-force oracle") {
  double prev = 1.0;
  for (int m = 1; m <= 10; ++m) {
    CAPTURE(m);
    const auto r = strong_threshold(m);
    CHECK(r.beta_star > 0.0);
    CHECK(r.beta_star <= prev);
    prev = r.beta_star;
    CHECK(std::fabs(r.beta_star - kBetaStar[m - 1]) <= 1e-4);
    CHECK(std::fabs(r.beta_star - kBetaStar[m - 1]) <= 2e-6);
    // certificate re-evaluated independently
    CHECK(threshold_lhs(r.beta_star, m, r.mu, r.delta) < 0.0);
    CHECK(r.lhs_value < 0.0);
    CHECK(r.mu > 0.0);
    CHECK(r.delta > 0.0);
    CHECK(r.delta < 1.0);
  }
}

TEST_CASE("refining the search grid never lowers beta_star") {
  for (int m : {1, 2, 4}) {
    const ThresholdGrid g;
    const auto coarse = strong_threshold(m, g);
    const auto fine = strong_threshold(m, g.refined());
    CHECK(fine.beta_star >= coarse.beta_star - g.beta_tol);
  }
  const ThresholdGrid r = ThresholdGrid{}.refined();
  CHECK(r.mu_points == 399);
  CHECK(r.delta_points == 197);
}

TEST_CASE("strong_threshold argument checks") {
  CHECK_THROWS_AS(strong_threshold(0), DomainError);
  CHECK_THROWS_AS(strong_threshold(51), DomainError);
  ThresholdGrid hopeless;
  hopeless.mu_min = 1e-6;
  hopeless.mu_max = 1e-5;
  hopeless.beta_min = 0.3;
  CHECK_THROWS_AS(strong_threshold(1, hopeless), SearchFailure);
}

TEST_CASE("bernoulli_s_bounds") {
  CHECK(bernoulli_s_bounds(1) == std::pair{0.5, 1.0});
  CHECK(bernoulli_s_bounds(4) == std::pair{0.25, 2.0});
  const auto [lo, hi] = bernoulli_s_bounds(9);
  CHECK(lo == doctest::Approx(1.0 / 6.0));
  CHECK(hi == doctest::Approx(3.0));
}
