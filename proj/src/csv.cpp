// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "robustid/error.hpp"

namespace robustid {
namespace {

constexpr const char* kTrialsHeader =
    "scenario_id,n,m,trial,estimator,error_l2,objective,k,status,wall_ms";
constexpr const char* kSummaryHeader = "n,estimator,noise_kind,mean_error,median_error,trials";
constexpr const char* kThresholdHeader = "m,beta_star,mu,delta,lhs";

template <class Rows, class Writer>
void emit_file(const std::string& path, const Rows& rows, Writer write) {
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out, rows);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::size_t to_size(const std::string& s) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("CSV: expected an unsigned integer, got '" + s + "'");
  }
  return v;
}

double to_double(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("CSV: expected a number, got '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<TrialRow> flatten(const std::vector<TrialRecord>& records) {
  std::vector<TrialRow> rows;
  for (const auto& r : records) {
    for (const auto& e : r.estimates) {
      rows.push_back(TrialRow{r.scenario_id, r.n, r.m, r.trial, std::string(method_name(e.method)),
                              e.error_l2, e.objective, r.outlier_count, e.status, e.wall_ms});
    }
  }
  return rows;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, p);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRow>& rows) {
  out << kTrialsHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.scenario_id) << ',' << r.n << ',' << r.m << ',' << r.trial << ','
        << csv_field(r.estimator) << ',' << format_double(r.error_l2) << ','
        << format_double(r.objective) << ',' << r.k << ',' << csv_field(r.status) << ','
        << format_double(r.wall_ms) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << method_name(r.estimator) << ',' << csv_field(r.noise_kind) << ','
        << format_double(r.mean_error) << ',' << format_double(r.median_error) << ',' << r.trials
        << '\n';
  }
}

void write_threshold_csv(std::ostream& out, const std::vector<ThresholdResult>& rows) {
  out << kThresholdHeader << '\n';
  for (const auto& r : rows) {
    out << r.m << ',' << format_double(r.beta_star) << ',' << format_double(r.mu) << ','
        << format_double(r.delta) << ',' << format_double(r.lhs_value) << '\n';
  }
}

void emit_csv(const std::string& path, const std::vector<TrialRow>& rows) {
  emit_file(path, rows, [](std::ostream& o, const auto& r) { write_trials_csv(o, r); });
}

void emit_csv(const std::string& path, const std::vector<SummaryRow>& rows) {
  emit_file(path, rows, [](std::ostream& o, const auto& r) { write_summary_csv(o, r); });
}

void emit_csv(const std::string& path, const std::vector<ThresholdResult>& rows) {
  emit_file(path, rows, [](std::ostream& o, const auto& r) { write_threshold_csv(o, r); });
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' && in.peek() == '\n') {
      continue;
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw ConfigError("CSV: unterminated quoted field");
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<TrialRow> parse_trials_csv(std::istream& in) {
  const auto records = parse_csv(in);
  if (records.empty()) throw ConfigError("CSV: missing header");
  std::string header;
  for (std::size_t i = 0; i < records[0].size(); ++i) {
    header += (i ? "," : "") + records[0][i];
  }
  if (header != kTrialsHeader) throw ConfigError("CSV: unexpected trials header");
  std::vector<TrialRow> rows;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != 10) throw ConfigError("CSV: trials row with wrong field count");
    rows.push_back(TrialRow{f[0], to_size(f[1]), to_size(f[2]), to_size(f[3]), f[4],
                            to_double(f[5]), to_double(f[6]), to_size(f[7]), f[8],
                            to_double(f[9])});
  }
  return rows;
}

}  // namespace robustid
