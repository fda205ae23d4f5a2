// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense bounded-variable primal simplex for problems in the standard form
//
//   minimize / maximize  cost^T x
//   subject to           A x = b,   lower <= x <= upper,
//
// where bounds may be infinite (free variables are allowed). Phase 1 uses one
// artificial per row. Pricing is Dantzig's rule, switching to Bland's
// smallest-index rule after a run of degenerate pivots, which rules out cycling.

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "robustid/linalg.hpp"

namespace robustid::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };

struct LpProblem {
  Matrix a;  // constraints x variables
  std::vector<double> b;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  Sense sense = Sense::kMinimize;

  std::size_t num_rows() const { return a.rows(); }
  std::size_t num_vars() const { return a.cols(); }

  // Throws DimensionError on inconsistent sizes, SpecError on lower > upper or NaN.
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kNumericalFailure };

std::string_view status_name(LpStatus s);

struct LpOptions {
  double feasibility_tol = 1e-9;
  // Relative to the largest |cost| entry.
  double optimality_tol = 1e-8;
  // 0 picks 20 * (rows + vars) + 1000.
  std::size_t max_iterations = 0;
  // Consecutive degenerate pivots tolerated before switching to Bland's rule.
  std::size_t degenerate_limit = 30;
  // Pivots between explicit refactorizations of the basis inverse.
  std::size_t refactor_interval = 64;
  // Use Bland's rule from the first iteration.
  bool bland_only = false;
};

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  // Row multipliers for the problem as posed (sign follows its sense):
  // at an optimum, cost_j - duals^T a_j has the sign dictated by x_j's bound.
  std::vector<double> duals;
  // Basic variable per row; indices >= num_vars() denote artificials.
  std::vector<std::size_t> basis;
  // For kUnbounded: a direction d with A d = 0 along which the objective
  // improves without bound and x + t d stays within bounds for all t >= 0.
  std::vector<double> ray;
  std::size_t iterations = 0;
};

LpSolution solve_lp(const LpProblem& problem, const LpOptions& options = {});

}  // namespace robustid::lp
