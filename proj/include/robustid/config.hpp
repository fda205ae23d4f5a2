// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON experiment configuration. Field names follow ExperimentConfig and
// Scenario; unknown keys are rejected. Example:
//
//   {
//     "scenario": {
//       "id": "fir",
//       "m": 5,
//       "input": {"kind": "gaussian", "sigma": 2.0},
//       "x_source": {"kind": "gaussian_random"},
//       "noise": {"kind": "gaussian", "sigma": 0.2},
//       "outliers": {
//         "count_model": {"kind": "uniform_fraction", "max_fraction": 0.2},
//         "magnitude": {"kind": "gaussian", "mean": 100.0, "sd": 50.0}
//       },
//       "estimators": ["lad", "ls"]
//     },
//     "n_grid": [100, 300, 1000],
//     "trials_per_point": 10,
//     "master_seed": 1,
//     "output": "fir_summary.csv",
//     "trials_output": "fir_trials.csv"
//   }
//
// Noise kinds: none | gaussian{sigma} | gamma{shape, scale} |
// exponential{mean}. Count models: fixed{k} | fraction{fraction} |
// uniform_fraction{max_fraction}. Outlier magnitudes are N(mean, sd^2), so a
// "N(0, 100)" outlier law is written {"mean": 0, "sd": 10}.

#include <string>

#include <json.hpp>

#include "robustid/harness.hpp"

namespace robustid {

ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(const std::string& text);
// ConfigError for unreadable files and schema violations.
ExperimentConfig load_config(const std::string& path);

nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace robustid
