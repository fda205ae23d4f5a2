// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// CSV emission: header row, comma separated, fields quoted when they contain
// a comma, quote or line break, '.' decimal point, 17 significant digits.
//
//   trials:     scenario_id,n,m,trial,estimator,error_l2,objective,k,status,wall_ms
//   summary:    n,estimator,noise_kind,mean_error,median_error,trials
//   thresholds: m,beta_star,mu,delta,lhs

#include <iosfwd>
#include <string>
#include <vector>

#include "robustid/harness.hpp"
#include "robustid/threshold.hpp"

namespace robustid {

// One line of the trials file.
struct TrialRow {
  std::string scenario_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t trial = 0;
  std::string estimator;
  double error_l2 = 0.0;
  double objective = 0.0;
  std::size_t k = 0;
  std::string status;
  double wall_ms = 0.0;

  friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

std::vector<TrialRow> flatten(const std::vector<TrialRecord>& records);

std::string format_double(double v);
std::string csv_field(const std::string& s);

void write_trials_csv(std::ostream& out, const std::vector<TrialRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
void write_threshold_csv(std::ostream& out, const std::vector<ThresholdResult>& rows);

// File variants; IoError when the path cannot be written.
void emit_csv(const std::string& path, const std::vector<TrialRow>& rows);
void emit_csv(const std::string& path, const std::vector<SummaryRow>& rows);
void emit_csv(const std::string& path, const std::vector<ThresholdResult>& rows);

// Splits CSV text into records of fields (RFC 4180 quoting, LF or CRLF).
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

// Reads a trials file back. ConfigError on a malformed header or row.
std::vector<TrialRow> parse_trials_csv(std::istream& in);

}  // namespace robustid
