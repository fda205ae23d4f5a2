// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/solver.hpp"

#include <string>

#include "robustid/error.hpp"
#include "robustid/kernels.hpp"

namespace robustid {

std::string_view status_name(EstimateStatus s) {
  switch (s) {
    case EstimateStatus::kOptimal:
      return "optimal";
    case EstimateStatus::kIterationLimit:
      return "iteration_limit";
    case EstimateStatus::kDegenerateFallback:
      return "degenerate_fallback";
  }
  return "unknown";
}

std::string_view method_name(Method m) { return m == Method::kLad ? "lad" : "ls"; }

namespace {

void check_shape(const Matrix& h, std::span<const double> y) {
  if (h.cols() < 1 || h.rows() < h.cols()) {
    throw DimensionError("estimator: need n >= m >= 1");
  }
  if (y.size() != h.rows()) throw DimensionError("estimator: y length != rows of H");
}

std::vector<double> residuals_of(const Matrix& h, std::span<const double> y,
                                 std::span<const double> x) {
  const std::vector<double> fit = h.times(x);
  std::vector<double> r(y.size());
  kernels::sub(y, fit, r);
  return r;
}

}  // namespace

lp::LpProblem lad_dual_problem(const Matrix& h, std::span<const double> y) {
  const std::size_t n = h.rows();
  const std::size_t m = h.cols();
  lp::LpProblem p;
  p.a = Matrix(m, n);
  for (std::size_t j = 0; j < m; ++j) {
    const auto col = h.col(j);
    for (std::size_t i = 0; i < n; ++i) p.a(j, i) = col[i];
  }
  p.b.assign(m, 0.0);
  p.cost.assign(y.begin(), y.end());
  p.lower.assign(n, -1.0);
  p.upper.assign(n, 1.0);
  p.sense = lp::Sense::kMaximize;
  return p;
}

Estimate lad_estimate(const Matrix& h, std::span<const double> y, const lp::LpOptions& options) {
  check_shape(h, y);
  if (!has_full_column_rank(h)) throw SingularSystemError("lad_estimate: H is rank deficient");

  const lp::LpProblem problem = lad_dual_problem(h, y);
  Estimate est;
  est.method = Method::kLad;

  lp::LpSolution sol = lp::solve_lp(problem, options);
  if (sol.status == lp::LpStatus::kNumericalFailure) {
    lp::LpOptions careful = options;
    careful.bland_only = true;
    careful.refactor_interval = 1;
    sol = lp::solve_lp(problem, careful);
    est.status = EstimateStatus::kDegenerateFallback;
  }
  est.iterations = sol.iterations;
  switch (sol.status) {
    case lp::LpStatus::kOptimal:
      break;
    case lp::LpStatus::kIterationLimit:
      est.status = EstimateStatus::kIterationLimit;
      break;
    default:
      throw Error("lad_estimate: simplex failed (" + std::string(lp::status_name(sol.status)) +
                  ")");
  }

  // The multipliers are the minimizer; re-solve the m interpolation equations
  // on the basic rows when the final basis is fully structural.
  est.x_hat = sol.duals;
  const std::size_t n = h.rows();
  bool structural = true;
  for (std::size_t j : sol.basis) structural = structural && j < n;
  if (structural && est.status != EstimateStatus::kIterationLimit) {
    std::vector<double> yb(sol.basis.size());
    for (std::size_t k = 0; k < yb.size(); ++k) yb[k] = y[sol.basis[k]];
    try {
      est.x_hat = solve_square(h.select_rows(sol.basis), std::move(yb));
    } catch (const SingularSystemError&) {
      est.x_hat = sol.duals;
    }
  }
  est.residuals = residuals_of(h, y, est.x_hat);
  est.objective = kernels::abs_sum(est.residuals);
  return est;
}

Estimate ls_estimate(const Matrix& h, std::span<const double> y) {
  check_shape(h, y);
  HouseholderQr qr(h);
  if (!qr.full_column_rank()) throw SingularSystemError("ls_estimate: H is rank deficient");
  Estimate est;
  est.method = Method::kLs;
  est.x_hat = qr.solve(y);
  est.residuals = residuals_of(h, y, est.x_hat);
  est.objective = norm2(est.residuals);
  return est;
}

}  // namespace robustid
