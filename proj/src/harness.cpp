// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <thread>

#include "robustid/csv.hpp"
#include "robustid/error.hpp"
#include "robustid/kernels.hpp"
#include "robustid/rng.hpp"

namespace robustid {

void Scenario::validate() const {
  if (m < 1 || n < m) throw ConfigError("scenario '" + id + "': need n >= m >= 1");
  if (estimators.empty()) throw ConfigError("scenario '" + id + "': no estimator selected");
  std::set<Method> seen(estimators.begin(), estimators.end());
  if (seen.size() != estimators.size()) {
    throw ConfigError("scenario '" + id + "': estimator listed twice");
  }
  if (const auto* fixed = std::get_if<FixedParameters>(&x_source)) {
    if (fixed->values.size() != m) {
      throw ConfigError("scenario '" + id + "': fixed x must have m entries");
    }
  }
}

void ExperimentConfig::validate() const {
  if (n_grid.empty()) throw ConfigError("n_grid must be nonempty");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw ConfigError("n_grid must be strictly increasing");
  }
  if (trials_per_point < 1) throw ConfigError("trials_per_point must be >= 1");
  for (std::size_t n : n_grid) {
    Scenario s = scenario;
    s.n = n;
    s.validate();
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t n_index,
                         std::size_t trial_index) {
  return derive_seed(derive_seed(master_seed, static_cast<std::uint64_t>(n_index)),
                     static_cast<std::uint64_t>(trial_index));
}

TrialRecord run_trial(const Scenario& s, std::uint64_t seed, std::size_t trial_index) {
  s.validate();
  TrialRecord rec;
  rec.scenario_id = s.id;
  rec.n = s.n;
  rec.m = s.m;
  rec.trial = trial_index;
  rec.seed = seed;

  const InputSequence h_seq =
      sample_input(s.input, s.n, s.m, derive_seed(seed, StreamRole::kInput));
  const RegressorMatrix h = build_regressor(h_seq, s.n, s.m);

  if (const auto* fixed = std::get_if<FixedParameters>(&s.x_source)) {
    rec.x_true = fixed->values;
  } else {
    Rng xr(derive_seed(seed, StreamRole::kParameter));
    rec.x_true.resize(s.m);
    for (double& v : rec.x_true) v = xr.gaussian();
  }

  OutlierSpec ospec = s.outliers;
  ospec.seed = derive_seed(seed, StreamRole::kOutliers);
  const OutlierDraw e = draw_outliers(ospec, s.n);
  rec.outlier_count = e.support.size();

  NoiseSpec nspec = s.noise;
  nspec.seed = derive_seed(seed, StreamRole::kNoise);
  const std::vector<double> w = sample_noise(nspec, s.n);

  std::vector<double> y = h.times(rec.x_true);
  rec.signal_energy = kernels::sum_sq(y);
  std::vector<double> corruption(e.values);
  kernels::axpy(1.0, w, corruption);
  rec.corruption_energy = kernels::sum_sq(corruption);
  kernels::axpy(1.0, corruption, y);

  for (Method method : s.estimators) {
    EstimatorRecord er;
    er.method = method;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Estimate est =
          method == Method::kLad ? lad_estimate(h, y) : ls_estimate(h, y);
      er.x_hat = est.x_hat;
      er.objective = est.objective;
      er.status = std::string(status_name(est.status));
      std::vector<double> diff(s.m);
      kernels::sub(est.x_hat, rec.x_true, diff);
      er.error_l2 = norm2(diff);
    } catch (const SingularSystemError&) {
      er.status = "singular";
      er.error_l2 = std::numeric_limits<double>::quiet_NaN();
      er.objective = std::numeric_limits<double>::quiet_NaN();
    } catch (const Error&) {
      er.status = "failed";
      er.error_l2 = std::numeric_limits<double>::quiet_NaN();
      er.objective = std::numeric_limits<double>::quiet_NaN();
    }
    er.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
    rec.estimates.push_back(std::move(er));
  }
  return rec;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records,
                                  const std::string& noise_kind) {
  std::vector<SummaryRow> out;
  std::vector<std::size_t> ns;
  for (const auto& r : records) ns.push_back(r.n);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (std::size_t n : ns) {
    for (Method method : {Method::kLad, Method::kLs}) {
      std::vector<double> errors;
      bool present = false;
      for (const auto& r : records) {
        if (r.n != n) continue;
        for (const auto& e : r.estimates) {
          if (e.method != method) continue;
          present = true;
          if (std::isfinite(e.error_l2)) errors.push_back(e.error_l2);
        }
      }
      if (!present) continue;
      SummaryRow row;
      row.n = n;
      row.estimator = method;
      row.noise_kind = noise_kind;
      row.trials = errors.size();
      if (errors.empty()) {
        row.mean_error = row.median_error = std::numeric_limits<double>::quiet_NaN();
      } else {
        double sum = 0.0;
        for (double v : errors) sum += v;
        row.mean_error = sum / static_cast<double>(errors.size());
        std::sort(errors.begin(), errors.end());
        const std::size_t k = errors.size();
        row.median_error = k % 2 == 1 ? errors[k / 2] : 0.5 * (errors[k / 2 - 1] + errors[k / 2]);
      }
      out.push_back(row);
    }
  }
  return out;
}

double snr_db(const std::vector<TrialRecord>& records) {
  double signal = 0.0, corruption = 0.0;
  for (const auto& r : records) {
    signal += r.signal_energy;
    corruption += r.corruption_energy;
  }
  if (corruption == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / corruption);
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::ofstream summary_file, trials_file;
  if (!cfg.output.empty()) summary_file = open_output(cfg.output);
  if (!cfg.trials_output.empty()) trials_file = open_output(cfg.trials_output);

  const std::size_t per = cfg.trials_per_point;
  const std::size_t jobs = cfg.n_grid.size() * per;
  ExperimentResult result;
  result.records.resize(jobs);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next.fetch_add(1); j < jobs; j = next.fetch_add(1)) {
      const std::size_t ni = j / per;
      const std::size_t t = j % per;
      Scenario s = cfg.scenario;
      s.n = cfg.n_grid[ni];
      result.records[j] = run_trial(s, trial_seed(cfg.master_seed, ni, t), t);
    }
  };
  std::size_t threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  result.summary = summarize(result.records, std::string(noise_kind_name(cfg.scenario.noise.kind)));
  result.snr_db = snr_db(result.records);

  if (summary_file.is_open()) {
    write_summary_csv(summary_file, result.summary);
    if (!summary_file) throw IoError("write failed: " + cfg.output);
  }
  if (trials_file.is_open()) {
    write_trials_csv(trials_file, flatten(result.records));
    if (!trials_file) throw IoError("write failed: " + cfg.trials_output);
  }
  return result;
}

Table1Data scenario_table1() {
  Table1Data d;
  d.z = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  d.y_clean = {.1779, .4555, .6174, .8347, 1.0907, 1.0793, 1.2406, 1.6721, 2.177, 1.9386, 1.9975};
  d.y_outlier = d.y_clean;
  d.y_outlier[d.outlier_index] = 11.9975;
  d.x_true = {0.2, 0.2};
  d.h = Matrix(d.z.size(), 2);
  for (std::size_t i = 0; i < d.z.size(); ++i) {
    d.h(i, 0) = d.z[i];
    d.h(i, 1) = 1.0;
  }
  return d;
}

NoiseKind figure2_gaussian() { return GaussianNoise{1.0}; }
NoiseKind figure2_gamma() { return GammaNoise{2.0, 1.0 / std::sqrt(6.0)}; }
NoiseKind figure2_exponential() { return ExponentialNoise{std::numbers::sqrt2 / 2.0}; }

ExperimentConfig figure2_config(const NoiseKind& noise, std::size_t trials_per_point,
                                std::uint64_t master_seed) {
  ExperimentConfig cfg;
  cfg.scenario.id = "figure2-" + std::string(noise_kind_name(noise));
  cfg.scenario.m = 5;
  cfg.scenario.input = GaussianInput{1.0};
  cfg.scenario.x_source = GaussianParameters{};
  cfg.scenario.noise = NoiseSpec{noise, 0};
  cfg.scenario.outliers = OutlierSpec{FixedFraction{0.5}, GaussianMagnitude{0.0, 10.0}, 0};
  cfg.scenario.estimators = {Method::kLad, Method::kLs};
  cfg.n_grid = {100, 300, 1000};
  cfg.trials_per_point = trials_per_point;
  cfg.master_seed = master_seed;
  return cfg;
}

ExperimentConfig fir_config(std::size_t trials_per_point, std::uint64_t master_seed) {
  ExperimentConfig cfg;
  cfg.scenario.id = "fir";
  cfg.scenario.m = 5;
  cfg.scenario.input = GaussianInput{2.0};
  cfg.scenario.x_source = GaussianParameters{};
  cfg.scenario.noise = NoiseSpec{GaussianNoise{0.2}, 0};
  cfg.scenario.outliers = OutlierSpec{UniformFraction{0.2}, GaussianMagnitude{100.0, 50.0}, 0};
  cfg.scenario.estimators = {Method::kLad, Method::kLs};
  cfg.n_grid = {100, 200, 500, 1000};
  cfg.trials_per_point = trials_per_point;
  cfg.master_seed = master_seed;
  return cfg;
}

}  // namespace robustid
