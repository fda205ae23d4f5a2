// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runtime budgets are part of each criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "robustid/cert.hpp"
#include "robustid/harness.hpp"
#include "robustid/matgen.hpp"
#include "robustid/solver.hpp"
#include "robustid/threshold.hpp"
#include "support/oracles.hpp"

using namespace robustid;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Matrix gaussian_toeplitz(std::size_t n, std::size_t m, std::uint64_t seed) {
  return build_regressor(sample_input(GaussianInput{}, n, m, seed), n, m).entries();
}

// 1. Table 1 golden values.
Outcome table1() {
  const auto t = scenario_table1();
  const auto ls_clean = ls_estimate(t.h, t.y_clean).x_hat;
  const auto ls_out = ls_estimate(t.h, t.y_outlier).x_hat;
  const auto lad_out = lad_estimate(t.h, t.y_outlier).x_hat;
  const bool ok = std::fabs(ls_clean[0] - 0.1958) <= 1e-3 && std::fabs(ls_clean[1] - 0.2286) <= 1e-3 &&
                  std::fabs(ls_out[0] - 0.6503) <= 1e-3 && std::fabs(ls_out[1] + 1.1351) <= 1e-3 &&
                  std::fabs(lad_out[0] - 0.2109) <= 5e-3 && std::fabs(lad_out[1] - 0.1955) <= 5e-3;
  return {ok, fmt("ls clean (%.5f, %.5f), ls outlier (%.5f, %.5f), lad outlier (%.5f, %.5f)",
                  ls_clean[0], ls_clean[1], ls_out[0], ls_out[1], lad_out[0], lad_out[1])};
}

// 2. Expected-gain constant and quadrature agreement.
Outcome expected_gain_check() {
  double worst_const = 0.0;
  for (double t : {0.1, 1.0, 2.0, 10.0}) {
    worst_const = std::max(worst_const, std::fabs(expected_gain(t, t) / t - 0.1666));
  }
  double worst_quad = 0.0;
  for (double t : {0.5, 1.0, 4.0}) {
    for (int i = 0; i <= 200; ++i) {
      const double l = 0.05 * i * t;
      worst_quad = std::max(worst_quad, std::fabs(expected_gain(l, t) - oracle::expected_gain_quadrature(l, t)));
    }
  }
  return {worst_const <= 5e-4 && worst_quad <= 1e-8,
          fmt("gain(t,t)/t = %.6f, max |const - 0.1666| = %.2e, max quadrature gap = %.2e",
              expected_gain(1.0, 1.0), worst_const, worst_quad)};
}

// 3. Threshold curve.
Outcome threshold_curve() {
  // tests/oracles/threshold_oracle.py
  constexpr std::array<double, 10> frozen{
      0.16840166415728777,   0.0260310914333236,    0.010138169809661916, 0.005292579589766075,
      0.003211119650858508,  0.0021376317293880427, 0.0015151493466952787, 0.001124399579748344,
      0.0008641248510992174, 0.0006825669625398574,
  };
  bool ok = true;
  double prev = 1.0, worst = 0.0;
  for (int m = 1; m <= 10; ++m) {
    const auto r = strong_threshold(m);
    ok = ok && r.beta_star > 0.0 && r.beta_star <= prev && threshold_lhs(r.beta_star, m, r.mu, r.delta) < 0.0;
    prev = r.beta_star;
    worst = std::max(worst, std::fabs(r.beta_star - frozen[m - 1]));
  }
  ok = ok && worst <= 1e-4;
  return {ok, fmt("beta*(1) = %.6f, beta*(10) = %.6f, max deviation from frozen = %.2e",
                  strong_threshold(1).beta_star, prev, worst)};
}

// 4. Noiseless sparse-error correction with half the rows corrupted.
Outcome sparse_correction() {
  ExperimentConfig cfg;
  cfg.scenario.id = "half-outliers";
  cfg.scenario.m = 5;
  cfg.scenario.outliers = {FixedFraction{0.5}, {100.0, 50.0}, 0};
  cfg.n_grid = {500};
  cfg.trials_per_point = 100;
  cfg.master_seed = 20240501;
  const auto r = run_experiment(cfg);
  std::size_t recovered = 0;
  double ls_sum = 0.0;
  for (const auto& rec : r.records) {
    const double xn = norm2(rec.x_true);
    for (const auto& e : rec.estimates) {
      if (e.method == Method::kLad && e.error_l2 <= 1e-6 * xn) ++recovered;
      if (e.method == Method::kLs) ls_sum += e.error_l2;
    }
  }
  const double ls_mean = ls_sum / static_cast<double>(r.records.size());
  return {recovered >= 95 && ls_mean > 1.0,
          fmt("LAD exact in %zu/100 trials, LS mean error %.3f", recovered, ls_mean)};
}

// 5. Consistency under noise plus outliers.
Outcome consistency() {
  struct Law {
    const char* name;
    NoiseKind kind;
  };
  const std::array<Law, 3> laws{{{"gaussian", figure2_gaussian()},
                                 {"gamma", figure2_gamma()},
                                 {"exponential", figure2_exponential()}}};
  bool ok = true;
  std::array<double, 3> at_small{}, at_large{};
  for (std::size_t i = 0; i < laws.size(); ++i) {
    auto cfg = figure2_config(laws[i].kind, 100, 7000 + i);
    cfg.n_grid = {100, 1000};
    const auto r = run_experiment(cfg);
    for (const auto& row : r.summary) {
      if (row.estimator != Method::kLad) continue;
      (row.n == 100 ? at_small : at_large)[i] = row.mean_error;
    }
    ok = ok && at_large[i] < at_small[i];
  }
  ok = ok && at_large[1] > at_large[2];
  return {ok, fmt("LAD mean error n=100 -> 1000: gaussian %.4f -> %.4f, gamma %.4f -> %.4f, "
                  "exponential %.4f -> %.4f",
                  at_small[0], at_large[0], at_small[1], at_large[1], at_small[2], at_large[2])};
}

// 6. Exact certifier against the direction-grid and empirical-recovery oracle.
Outcome certifier_equivalence() {
  std::mt19937_64 g(606);
  std::size_t agree = 0, certified = 0, recovered_all = 0, defeated = 0, falsified_strict = 0;
  const std::size_t instances = 200;
  for (std::size_t it = 0; it < instances; ++it) {
    const std::size_t m = 1 + g() % 2;
    const std::size_t n = m + 1 + g() % (12 - m);
    Rng pick(g());
    const std::size_t k = std::min<std::size_t>(g() % 4, n);
    const auto support = sample_support(pick, n, k);
    const Matrix h = gaussian_toeplitz(n, m, g());
    std::vector<bool> mask(n, false);
    for (auto i : support) mask[i] = true;

    const auto cert = certify_support_exact(h, support);
    const double ratio = oracle::balance_ratio_max(h, mask);
    const bool grid_says_ok = ratio < 1.0;
    bool empirical_ok;
    if (grid_says_ok) {
      empirical_ok = empirical_recovery_rate(h, support, 20, {100.0, 50.0}, g()) == 1.0;
    } else {
      // Outliers along the worst direction found by the grid must defeat LAD.
      empirical_ok = false;
      std::vector<double> best_z(m, 0.0);
      double best = -1.0;
      auto consider = [&](std::vector<double> z) {
        const auto hz = h.times(z);
        double in = 0, off = 0;
        for (std::size_t i = 0; i < n; ++i) (mask[i] ? in : off) += std::fabs(hz[i]);
        const double r = off > 0 ? in / off : (in > 0 ? INFINITY : 0.0);
        if (r > best) {
          best = r;
          best_z = z;
        }
      };
      if (m == 1) {
        consider({1.0});
      } else {
        for (std::size_t i = 0; i < n; ++i) consider({-h(i, 1), h(i, 0)});
      }
      std::vector<double> x(m);
      for (std::size_t j = 0; j < m; ++j) x[j] = 0.3 + 0.5 * static_cast<double>(j);
      auto y = h.times(x);
      const auto hw = h.times(best_z);
      for (auto i : support) y[i] += hw[i];
      const auto est = lad_estimate(h, y);
      double err = 0.0;
      for (std::size_t j = 0; j < m; ++j) err += (est.x_hat[j] - x[j]) * (est.x_hat[j] - x[j]);
      empirical_ok = std::sqrt(err) > 1e-6;
      ++falsified_strict;
      if (empirical_ok) ++defeated;
    }
    const bool oracle_certified = grid_says_ok && empirical_ok;
    const bool exact_certified = cert.verdict == Verdict::kCertified;
    if (oracle_certified == exact_certified) ++agree;
    if (exact_certified) {
      ++certified;
      if (grid_says_ok && empirical_ok) ++recovered_all;
    }
  }
  return {agree == instances && recovered_all == certified,
          fmt("agree on %zu/%zu, certified %zu (all recovered: %zu), falsified %zu (LAD defeated: %zu)",
              agree, instances, certified, recovered_all, falsified_strict, defeated)};
}

// 7. Concentration diagnostics.
Outcome concentration() {
  const double target = std::sqrt(2.0 / std::numbers::pi);
  double worst_rel = 0.0;
  Rng rng(707);
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto z = sample_unit_vector(rng, m);
    const auto r = concentration_diagnostic(10000, m, z, 50, rng.next_u64());
    worst_rel = std::max(worst_rel, std::fabs(r.mean - target) / target);
  }
  std::size_t tested = 0, inside = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (int it = 0; it < 100; ++it) {
      const auto z = sample_unit_vector(rng, m);
      const auto r = concentration_diagnostic(2000, m, z, 5, rng.next_u64(), BernoulliInput{});
      ++tested;
      if (r.mean >= r.bounds.first && r.mean <= r.bounds.second) ++inside;
    }
  }
  return {worst_rel <= 0.02 && inside == tested,
          fmt("Gaussian worst relative deviation %.4f, Bernoulli within bounds %zu/%zu", worst_rel,
              inside, tested)};
}

// 8. Solver correctness properties.
Outcome solver_properties() {
  std::mt19937_64 g(808);
  std::normal_distribution<double> nd;
  auto rand_matrix = [&](std::size_t n, std::size_t m) {
    Matrix h(n, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) h(i, j) = nd(g);
    return h;
  };
  auto rand_vec = [&](std::size_t n, double s) {
    std::vector<double> v(n);
    for (auto& x : v) x = s * nd(g);
    return v;
  };
  std::size_t vertex_ok = 0;
  double worst_rel = 0.0;
  for (int it = 0; it < 500; ++it) {
    const std::size_t m = 1 + g() % 2;
    const std::size_t n = m + g() % (9 - m);
    const Matrix h = rand_matrix(n, m);
    const auto y = rand_vec(n, 2.0);
    const double got = lad_estimate(h, y).objective;
    const double want = oracle::lad_vertex_min(h, y);
    const double rel = std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
    worst_rel = std::max(worst_rel, std::fabs(got - want) <= 1e-12 ? 0.0 : rel);
    if (std::fabs(got - want) <= 1e-12 || rel <= 1e-8) ++vertex_ok;
  }
  std::size_t equi_ok = 0;
  for (int it = 0; it < 100; ++it) {
    const std::size_t m = 1 + g() % 3;
    const std::size_t n = m + 2 + g() % 10;
    const Matrix h = rand_matrix(n, m);
    const auto y = rand_vec(n, 1.0);
    const auto base = lad_estimate(h, y);
    const double c = 0.1 + 9.9 * std::uniform_real_distribution<double>()(g);
    auto ys = y;
    for (auto& v : ys) v *= c;
    const auto scaled = lad_estimate(h, ys);
    const auto v = rand_vec(m, 1.0);
    auto yv = h.times(v);
    for (std::size_t i = 0; i < n; ++i) yv[i] += y[i];
    const auto shifted = lad_estimate(h, yv);
    bool ok = std::fabs(scaled.objective - c * base.objective) <= 1e-9 * std::max(1.0, c * base.objective) &&
              std::fabs(shifted.objective - base.objective) <= 1e-9 * std::max(1.0, base.objective);
    for (std::size_t j = 0; j < m; ++j) {
      ok = ok && std::fabs(scaled.x_hat[j] - c * base.x_hat[j]) <= 1e-8 * std::max(1.0, std::fabs(c * base.x_hat[j]));
      ok = ok && std::fabs(shifted.x_hat[j] - base.x_hat[j] - v[j]) <= 1e-8 * std::max(1.0, std::fabs(base.x_hat[j] + v[j]));
    }
    if (ok) ++equi_ok;
  }
  return {vertex_ok == 500 && equi_ok == 100,
          fmt("vertex oracle %zu/500 (worst relative gap %.2e), equivariance %zu/100", vertex_ok,
              worst_rel, equi_ok)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table1-golden-values", 1.0, table1},
      {2, "expected-gain-constant", 1.0, expected_gain_check},
      {3, "threshold-curve", 30.0, threshold_curve},
      {4, "sparse-error-correction", 120.0, sparse_correction},
      {5, "consistency-under-noise", 600.0, consistency},
      {6, "certifier-oracle-equivalence", 300.0, certifier_equivalence},
      {7, "concentration-diagnostics", 60.0, concentration},
      {8, "solver-correctness", 60.0, solver_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %d %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
