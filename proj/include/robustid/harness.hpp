// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Seeded Monte Carlo experiments on the observation model y = H x + e + w,
// comparing the LAD and least-squares estimators.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "robustid/linalg.hpp"
#include "robustid/matgen.hpp"
#include "robustid/solver.hpp"

namespace robustid {

// x ~ N(0, I_m), drawn per trial.
struct GaussianParameters {};
struct FixedParameters {
  std::vector<double> values;
};
using ParameterSource = std::variant<GaussianParameters, FixedParameters>;

// The seed fields inside `noise` and `outliers` are ignored by run_trial,
// which derives them from the trial seed.
struct Scenario {
  std::string id = "scenario";
  std::size_t n = 100;
  std::size_t m = 5;
  InputDistribution input = GaussianInput{};
  ParameterSource x_source = GaussianParameters{};
  NoiseSpec noise{NoNoise{}, 0};
  OutlierSpec outliers{FixedCount{0}, GaussianMagnitude{0.0, 1.0}, 0};
  std::vector<Method> estimators{Method::kLad, Method::kLs};

  // ConfigError on n < m, m < 1, empty or repeated estimators, bad fixed x.
  void validate() const;
};

struct EstimatorRecord {
  Method method = Method::kLad;
  std::vector<double> x_hat;
  double error_l2 = 0.0;  // ||x_hat - x||_2, NaN when the solver failed
  double objective = 0.0;
  // optimal | iteration_limit | degenerate_fallback | singular | failed
  std::string status;
  double wall_ms = 0.0;
};

struct TrialRecord {
  std::string scenario_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t outlier_count = 0;  // realized support size
  std::vector<double> x_true;
  std::vector<EstimatorRecord> estimates;
  double signal_energy = 0.0;      // ||H x||^2
  double corruption_energy = 0.0;  // ||e + w||^2
};

// Draws h, x, e, w from independent sub-streams of `seed`, forms y and runs
// each selected estimator. Solver errors land in EstimatorRecord::status.
TrialRecord run_trial(const Scenario& s, std::uint64_t seed, std::size_t trial_index = 0);

struct ExperimentConfig {
  Scenario scenario;
  std::vector<std::size_t> n_grid;  // nonempty, strictly increasing; overrides scenario.n
  std::size_t trials_per_point = 10;
  std::uint64_t master_seed = 1;
  std::string output;         // summary CSV; empty = do not write
  std::string trials_output;  // per-trial CSV; empty = do not write
  std::size_t threads = 0;    // 0 = hardware concurrency

  void validate() const;
};

struct SummaryRow {
  std::size_t n = 0;
  Method estimator = Method::kLad;
  std::string noise_kind;
  double mean_error = 0.0;
  double median_error = 0.0;
  std::size_t trials = 0;  // successful solves aggregated
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  // sorted by (n, trial)
  std::vector<SummaryRow> summary;   // sorted by (n, estimator)
  double snr_db = 0.0;               // 10 log10(sum ||Hx||^2 / sum ||e + w||^2)
};

// Seed for trial `trial_index` at grid point `n_index`.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t n_index, std::size_t trial_index);

// Runs the sweep, in parallel across trials, and writes the CSV outputs named
// in the config. Output files are opened before any trial runs (IoError).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records,
                                  const std::string& noise_kind);

double snr_db(const std::vector<TrialRecord>& records);

// The 11-point straight-line dataset y = k z + b + noise with true (k, b) =
// (0.2, 0.2); the outlier variant replaces y at z = 10 by 11.9975.
struct Table1Data {
  std::vector<double> z;
  std::vector<double> y_clean;
  std::vector<double> y_outlier;
  std::vector<double> x_true;
  std::size_t outlier_index = 10;
  Matrix h;  // columns (z, 1)
};

Table1Data scenario_table1();

// Built-in sweeps. figure2: m = 5, half the rows hit by N(0, 100) outliers
// (variance 100), three equal-energy noise laws. fir: input N(0, 2^2), noise
// N(0, 0.2^2), round(U * 0.2 * n) outliers with magnitudes N(100, 50^2).
ExperimentConfig figure2_config(const NoiseKind& noise, std::size_t trials_per_point,
                                std::uint64_t master_seed);
ExperimentConfig fir_config(std::size_t trials_per_point, std::uint64_t master_seed);

// The three unit-energy noise laws used by figure2_config.
NoiseKind figure2_gaussian();
NoiseKind figure2_gamma();
NoiseKind figure2_exponential();

}  // namespace robustid
