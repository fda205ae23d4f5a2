// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end.
//
//   robustid experiment --config <file> [--seed N] [--out <path>]
//   robustid experiment --builtin figure2-gamma|figure2-gaussian|figure2-exponential|fir
//   robustid table1
//   robustid certify --n 12 --m 2 --support 1,3 [--seed 7] [--mc-trials 100000]
//   robustid threshold --m-min 1 --m-max 10 [--out thresholds.csv]
//   robustid --version
//
// Exit codes: 0 success, 1 configuration or input error, 2 solver failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "robustid/cert.hpp"
#include "robustid/config.hpp"
#include "robustid/csv.hpp"
#include "robustid/error.hpp"
#include "robustid/harness.hpp"
#include "robustid/kernels.hpp"
#include "robustid/matgen.hpp"
#include "robustid/solver.hpp"
#include "robustid/threshold.hpp"

namespace {

using robustid::Matrix;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

std::vector<std::size_t> parse_support(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw robustid::ConfigError("--support: not an index: '" + item + "'");
    }
    if (pos != item.size() || v < 1 || v > n) {
      throw robustid::ConfigError("--support: indices are 1-based and must lie in [1, n]");
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

std::string fmt(double v) { return robustid::format_double(v); }

int run_experiment_cmd(const std::string& config_path, const std::string& builtin,
                       std::optional<std::uint64_t> seed, const std::string& out_path,
                       std::optional<std::size_t> trials) {
  robustid::ExperimentConfig cfg;
  if (!config_path.empty()) {
    cfg = robustid::load_config(config_path);
  } else if (builtin == "figure2-gaussian") {
    cfg = robustid::figure2_config(robustid::figure2_gaussian(), 10, 1);
  } else if (builtin == "figure2-gamma") {
    cfg = robustid::figure2_config(robustid::figure2_gamma(), 10, 1);
  } else if (builtin == "figure2-exponential") {
    cfg = robustid::figure2_config(robustid::figure2_exponential(), 10, 1);
  } else if (builtin == "fir") {
    cfg = robustid::fir_config(10, 1);
  } else {
    throw robustid::ConfigError("experiment: pass --config <file> or a known --builtin name");
  }
  if (seed) cfg.master_seed = *seed;
  if (!out_path.empty()) cfg.output = out_path;
  if (trials) cfg.trials_per_point = *trials;
  cfg.validate();

  const robustid::ExperimentResult res = robustid::run_experiment(cfg);
  if (cfg.output.empty()) robustid::write_summary_csv(std::cout, res.summary);
  std::cerr << "scenario " << cfg.scenario.id << ": " << res.records.size() << " trials, SNR "
            << fmt(res.snr_db) << " dB\n";
  return kExitOk;
}

int run_table1_cmd() {
  const robustid::Table1Data d = robustid::scenario_table1();
  const auto ls_clean = robustid::ls_estimate(d.h, d.y_clean);
  const auto ls_out = robustid::ls_estimate(d.h, d.y_outlier);
  const auto lad_clean = robustid::lad_estimate(d.h, d.y_clean);
  const auto lad_out = robustid::lad_estimate(d.h, d.y_outlier);
  std::cout << "variant,estimator,slope,intercept,objective\n";
  auto row = [](const char* variant, const robustid::Estimate& e) {
    std::cout << variant << ',' << robustid::method_name(e.method) << ',' << fmt(e.x_hat[0]) << ','
              << fmt(e.x_hat[1]) << ',' << fmt(e.objective) << '\n';
  };
  row("clean", ls_clean);
  row("clean", lad_clean);
  row("outlier", ls_out);
  row("outlier", lad_out);
  return kExitOk;
}

int run_certify_cmd(std::size_t n, std::size_t m, const std::string& support_text,
                    std::uint64_t seed, const std::string& input, std::size_t mc_trials,
                    std::size_t recovery_trials) {
  if (m < 1 || n < m) throw robustid::ConfigError("certify: need n >= m >= 1");
  robustid::InputDistribution dist = robustid::GaussianInput{1.0};
  if (input == "bernoulli") {
    dist = robustid::BernoulliInput{};
  } else if (input != "gaussian") {
    throw robustid::ConfigError("certify: --input must be gaussian or bernoulli");
  }
  const auto support = parse_support(support_text, n);
  const auto h_seq = robustid::sample_input(dist, n, m, seed);
  const auto h = robustid::build_regressor(h_seq, n, m);

  const robustid::SupportCert cert =
      mc_trials > 0 ? robustid::certify_support_mc(h.entries(), support, mc_trials, seed)
                    : robustid::certify_support_exact(h.entries(), support);
  json out;
  out["n"] = n;
  out["m"] = m;
  out["seed"] = seed;
  out["method"] = mc_trials > 0 ? "monte_carlo" : "exact";
  std::vector<std::size_t> one_based;
  for (std::size_t i : cert.support) one_based.push_back(i + 1);
  out["support"] = one_based;
  out["verdict"] = std::string(robustid::verdict_name(cert.verdict));
  out["worst_gap"] = fmt(cert.worst_gap);
  out["problems_solved"] = cert.problems_solved;
  if (cert.witness) {
    out["witness"] = *cert.witness;
    out["witness_gap"] = robustid::balance_gap(h.entries(), cert.support, *cert.witness);
  }
  if (recovery_trials > 0) {
    out["recovery_rate"] = robustid::empirical_recovery_rate(
        h.entries(), cert.support, recovery_trials, robustid::GaussianMagnitude{100.0, 50.0},
        seed);
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_threshold_cmd(int m_min, int m_max, const std::string& out_path) {
  if (m_min < 1 || m_max < m_min) throw robustid::ConfigError("threshold: need 1 <= m-min <= m-max");
  std::vector<robustid::ThresholdResult> rows;
  for (int m = m_min; m <= m_max; ++m) rows.push_back(robustid::strong_threshold(m));
  if (out_path.empty()) {
    robustid::write_threshold_csv(std::cout, rows);
  } else {
    robustid::emit_csv(out_path, rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust LAD system identification under sparse outliers"};
  app.set_version_flag("--version", std::string("robustid ") + ROBUSTID_VERSION + " (kernels: " +
                                        std::string(robustid::kernels::isa_name(
                                            robustid::kernels::active().isa)) +
                                        ")");
  app.require_subcommand(1);

  auto* exp = app.add_subcommand("experiment", "Run a seeded Monte Carlo sweep");
  std::string config_path, builtin, exp_out;
  std::optional<std::uint64_t> exp_seed;
  std::optional<std::size_t> exp_trials;
  exp->add_option("--config", config_path, "JSON experiment config");
  exp->add_option("--builtin", builtin,
                  "figure2-gaussian | figure2-gamma | figure2-exponential | fir");
  exp->add_option("--seed", exp_seed, "Master seed (overrides the config)");
  exp->add_option("--out", exp_out, "Summary CSV path (overrides the config)");
  exp->add_option("--trials", exp_trials, "Trials per grid point (overrides the config)");

  auto* t1 = app.add_subcommand("table1", "Fit the built-in 11-point line dataset");

  auto* cert = app.add_subcommand("certify", "Check the balance condition for a support");
  std::size_t cert_n = 0, cert_m = 0, mc_trials = 0, recovery_trials = 0;
  std::string support_text, input = "gaussian";
  std::uint64_t cert_seed = 1;
  cert->add_option("--n", cert_n, "Rows")->required();
  cert->add_option("--m", cert_m, "Columns")->required();
  cert->add_option("--support", support_text, "Comma-separated 1-based row indices")->required();
  cert->add_option("--seed", cert_seed, "Input sequence seed");
  cert->add_option("--input", input, "gaussian | bernoulli");
  cert->add_option("--mc-trials", mc_trials, "Use the randomized falsifier with this many directions");
  cert->add_option("--recovery-trials", recovery_trials,
                   "Also report the empirical LAD recovery rate");

  auto* th = app.add_subcommand("threshold", "Compute strong recovery thresholds");
  int m_min = 1, m_max = 10;
  std::string th_out;
  th->add_option("--m-min", m_min, "Smallest m");
  th->add_option("--m-max", m_max, "Largest m");
  th->add_option("--out", th_out, "CSV output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (exp->parsed()) return run_experiment_cmd(config_path, builtin, exp_seed, exp_out, exp_trials);
    if (t1->parsed()) return run_table1_cmd();
    if (cert->parsed()) {
      return run_certify_cmd(cert_n, cert_m, support_text, cert_seed, input, mc_trials,
                             recovery_trials);
    }
    if (th->parsed()) return run_threshold_cmd(m_min, m_max, th_out);
  } catch (const robustid::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const robustid::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const robustid::DimensionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const robustid::SpecError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const robustid::DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const robustid::SizeError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const robustid::Error& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitOk;
}
