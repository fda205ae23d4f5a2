// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "robustid/linalg.hpp"
#include "robustid/lp.hpp"
#include "robustid/matgen.hpp"

namespace robustid {

enum class EstimateStatus { kOptimal, kIterationLimit, kDegenerateFallback };
enum class Method { kLad, kLs };

std::string_view status_name(EstimateStatus s);
std::string_view method_name(Method m);

struct Estimate {
  std::vector<double> x_hat;
  // ||residuals||_1 for LAD, ||residuals||_2 for LS.
  double objective = 0.0;
  std::vector<double> residuals;  // y - H x_hat
  EstimateStatus status = EstimateStatus::kOptimal;
  Method method = Method::kLad;
  std::size_t iterations = 0;
};

// LP encoding of min_x ||y - H x||_1 through its dual,
//
//   maximize y^T u  subject to  H^T u = 0,  -1 <= u <= 1,
//
// whose constraint rows number m rather than n. At an optimal basis the row
// multipliers are the LAD minimizer and the m basic rows are fitted exactly.
lp::LpProblem lad_dual_problem(const Matrix& h, std::span<const double> y);

// Least-absolute-deviation fit. Returns a vertex of the optimal face. Throws
// SingularSystemError when H lacks full column rank, DimensionError on shape
// mismatch. Hitting the iteration cap is reported through `status`.
Estimate lad_estimate(const Matrix& h, std::span<const double> y,
                      const lp::LpOptions& options = {});
inline Estimate lad_estimate(const RegressorMatrix& h, std::span<const double> y,
                             const lp::LpOptions& options = {}) {
  return lad_estimate(h.entries(), y, options);
}

// Least squares via Householder QR.
Estimate ls_estimate(const Matrix& h, std::span<const double> y);
inline Estimate ls_estimate(const RegressorMatrix& h, std::span<const double> y) {
  return ls_estimate(h.entries(), y);
}

}  // namespace robustid
