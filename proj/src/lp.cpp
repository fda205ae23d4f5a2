// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "robustid/error.hpp"

namespace robustid::lp {

std::string_view status_name(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
    case LpStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

void LpProblem::validate() const {
  const std::size_t nv = num_vars();
  if (b.size() != num_rows()) throw DimensionError("LpProblem: b length != rows of A");
  if (cost.size() != nv || lower.size() != nv || upper.size() != nv) {
    throw DimensionError("LpProblem: cost/bounds length != columns of A");
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j] ||
        lower[j] == kInf || upper[j] == -kInf) {
      throw SpecError("LpProblem: invalid bounds on variable " + std::to_string(j));
    }
    if (!std::isfinite(cost[j])) throw SpecError("LpProblem: non-finite cost");
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw SpecError("LpProblem: non-finite right-hand side");
  }
}

namespace {

enum class VarState : std::uint8_t { kBasic, kAtLower, kAtUpper, kFreeZero };

constexpr double kPivotTol = 1e-11;
constexpr double kSingularTol = 1e-13;

class Simplex {
 public:
  Simplex(const LpProblem& p, const LpOptions& o)
      : p_(p),
        opt_(o),
        rows_(p.num_rows()),
        nv_(p.num_vars()),
        ntot_(p.num_vars() + p.num_rows()) {
    max_iter_ = opt_.max_iterations != 0 ? opt_.max_iterations : 20 * (rows_ + nv_) + 1000;
  }

  LpSolution run() {
    init();

    std::vector<double> phase1_cost(ntot_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) phase1_cost[nv_ + i] = 1.0;
    LpStatus st = run_phase(phase1_cost);
    if (st != LpStatus::kOptimal) return finish(st == LpStatus::kUnbounded ? LpStatus::kNumericalFailure : st,
                                                phase1_cost);

    double infeas = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) infeas += std::fabs(x_[nv_ + i]);
    double bscale = 1.0;
    for (double v : p_.b) bscale = std::max(bscale, std::fabs(v));
    if (infeas > opt_.feasibility_tol * bscale * static_cast<double>(std::max<std::size_t>(rows_, 1))) {
      return finish(LpStatus::kInfeasible, phase1_cost);
    }
    // Artificials are pinned at zero for phase 2 and can never re-enter.
    for (std::size_t i = 0; i < rows_; ++i) {
      lo_[nv_ + i] = 0.0;
      up_[nv_ + i] = 0.0;
      if (state_[nv_ + i] != VarState::kBasic) {
        state_[nv_ + i] = VarState::kAtLower;
        x_[nv_ + i] = 0.0;
      }
    }

    std::vector<double> cost(ntot_, 0.0);
    const double sign = p_.sense == Sense::kMaximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nv_; ++j) cost[j] = sign * p_.cost[j];
    bland_ = opt_.bland_only;
    degenerate_run_ = 0;
    st = run_phase(cost);
    return finish(st, cost);
  }

 private:
  void init() {
    lo_.assign(ntot_, 0.0);
    up_.assign(ntot_, kInf);
    x_.assign(ntot_, 0.0);
    state_.assign(ntot_, VarState::kAtLower);
    art_sign_.assign(rows_, 1.0);
    for (std::size_t j = 0; j < nv_; ++j) {
      lo_[j] = p_.lower[j];
      up_[j] = p_.upper[j];
      if (std::isfinite(lo_[j])) {
        x_[j] = lo_[j];
        state_[j] = VarState::kAtLower;
      } else if (std::isfinite(up_[j])) {
        x_[j] = up_[j];
        state_[j] = VarState::kAtUpper;
      } else {
        x_[j] = 0.0;
        state_[j] = VarState::kFreeZero;
      }
    }
    std::vector<double> resid(p_.b);
    for (std::size_t j = 0; j < nv_; ++j) {
      if (x_[j] == 0.0) continue;
      const auto col = p_.a.col(j);
      for (std::size_t i = 0; i < rows_; ++i) resid[i] -= col[i] * x_[j];
    }
    head_.resize(rows_);
    binv_.assign(rows_ * rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      art_sign_[i] = resid[i] < 0 ? -1.0 : 1.0;
      head_[i] = nv_ + i;
      state_[nv_ + i] = VarState::kBasic;
      x_[nv_ + i] = std::fabs(resid[i]);
      binv_[i * rows_ + i] = art_sign_[i];
    }
    bland_ = opt_.bland_only;
  }

  double col_dot(std::size_t j, const std::vector<double>& v) const {
    if (j >= nv_) return art_sign_[j - nv_] * v[j - nv_];
    const auto col = p_.a.col(j);
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += col[i] * v[i];
    return s;
  }

  void column(std::size_t j, std::vector<double>& out) const {
    if (j >= nv_) {
      std::fill(out.begin(), out.end(), 0.0);
      out[j - nv_] = art_sign_[j - nv_];
      return;
    }
    const auto col = p_.a.col(j);
    std::copy(col.begin(), col.end(), out.begin());
  }

  // Rebuilds the basis inverse by Gauss-Jordan elimination and recomputes the
  // basic values from the nonbasic ones.
  bool refactor() {
    const std::size_t r = rows_;
    std::vector<double> work(r * 2 * r, 0.0);
    std::vector<double> col(r);
    double scale = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      column(head_[i], col);
      for (std::size_t k = 0; k < r; ++k) {
        work[k * 2 * r + i] = col[k];
        scale = std::max(scale, std::fabs(col[k]));
      }
      work[i * 2 * r + r + i] = 1.0;
    }
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t piv = c;
      for (std::size_t k = c + 1; k < r; ++k) {
        if (std::fabs(work[k * 2 * r + c]) > std::fabs(work[piv * 2 * r + c])) piv = k;
      }
      const double pv = work[piv * 2 * r + c];
      if (!(std::fabs(pv) > kSingularTol * std::max(scale, 1.0))) return false;
      if (piv != c) {
        for (std::size_t t = 0; t < 2 * r; ++t) std::swap(work[piv * 2 * r + t], work[c * 2 * r + t]);
      }
      for (std::size_t t = 0; t < 2 * r; ++t) work[c * 2 * r + t] /= pv;
      for (std::size_t k = 0; k < r; ++k) {
        if (k == c) continue;
        const double f = work[k * 2 * r + c];
        if (f == 0.0) continue;
        for (std::size_t t = 0; t < 2 * r; ++t) work[k * 2 * r + t] -= f * work[c * 2 * r + t];
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) binv_[i * r + k] = work[i * 2 * r + r + k];
    }

    std::vector<double> rhs(p_.b);
    for (std::size_t j = 0; j < ntot_; ++j) {
      if (state_[j] == VarState::kBasic || x_[j] == 0.0) continue;
      column(j, col);
      for (std::size_t i = 0; i < r; ++i) rhs[i] -= col[i] * x_[j];
    }
    for (std::size_t i = 0; i < r; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < r; ++k) s += binv_[i * r + k] * rhs[k];
      x_[head_[i]] = s;
    }
    pivots_since_refactor_ = 0;
    return true;
  }

  void compute_duals(const std::vector<double>& cost, std::vector<double>& pi) const {
    const std::size_t r = rows_;
    std::fill(pi.begin(), pi.end(), 0.0);
    for (std::size_t i = 0; i < r; ++i) {
      const double cb = cost[head_[i]];
      if (cb == 0.0) continue;
      for (std::size_t k = 0; k < r; ++k) pi[k] += cb * binv_[i * r + k];
    }
  }

  LpStatus run_phase(const std::vector<double>& cost) {
    const std::size_t r = rows_;
    double cmax = 0.0;
    for (double c : cost) cmax = std::max(cmax, std::fabs(c));
    const double dtol = opt_.optimality_tol * std::max(1.0, cmax);
    const double ftol = opt_.feasibility_tol;

    std::vector<double> pi(r), aq(r), w(r);
    bool verified = false;
    for (;;) {
      if (iterations_ >= max_iter_) return LpStatus::kIterationLimit;
      if (pivots_since_refactor_ >= opt_.refactor_interval) {
        if (!refactor()) return LpStatus::kNumericalFailure;
      }
      compute_duals(cost, pi);

      // Pricing.
      std::size_t q = ntot_;
      double dir = 0.0;
      double best = 0.0;
      for (std::size_t j = 0; j < ntot_; ++j) {
        const VarState s = state_[j];
        if (s == VarState::kBasic || lo_[j] == up_[j]) continue;
        const double d = cost[j] - col_dot(j, pi);
        double jd = 0.0;
        if ((s == VarState::kAtLower || s == VarState::kFreeZero) && d < -dtol) {
          jd = 1.0;
        } else if ((s == VarState::kAtUpper || s == VarState::kFreeZero) && d > dtol) {
          jd = -1.0;
        }
        if (jd == 0.0) continue;
        if (bland_) {
          q = j;
          dir = jd;
          break;
        }
        if (std::fabs(d) > best) {
          best = std::fabs(d);
          q = j;
          dir = jd;
        }
      }
      if (q == ntot_) {
        // Confirm optimality on a freshly factorized basis before stopping.
        if (pivots_since_refactor_ > 0 && !verified) {
          if (!refactor()) return LpStatus::kNumericalFailure;
          verified = true;
          continue;
        }
        return LpStatus::kOptimal;
      }
      verified = false;
      ++iterations_;

      column(q, aq);
      for (std::size_t i = 0; i < r; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < r; ++k) s += binv_[i * r + k] * aq[k];
        w[i] = s;
      }

      // Ratio test. Basic variable i moves at rate -dir * w[i] per unit step.
      const double flip = (std::isfinite(lo_[q]) && std::isfinite(up_[q])) ? up_[q] - lo_[q] : kInf;
      auto exact_ratio = [&](std::size_t i, double rate) {
        const std::size_t j = head_[i];
        if (rate < 0 && std::isfinite(lo_[j])) return (x_[j] - lo_[j]) / -rate;
        if (rate > 0 && std::isfinite(up_[j])) return (up_[j] - x_[j]) / rate;
        return kInf;
      };
      std::size_t leave = r;
      double theta = kInf;
      if (bland_) {
        for (std::size_t i = 0; i < r; ++i) {
          if (std::fabs(w[i]) <= kPivotTol) continue;
          const double ratio = std::max(0.0, exact_ratio(i, -dir * w[i]));
          if (ratio == kInf) continue;
          const double eps = 1e-12 * std::max(1.0, theta == kInf ? 1.0 : theta);
          if (leave == r || ratio < theta - eps) {
            theta = ratio;
            leave = i;
          } else if (ratio <= theta + eps && head_[i] < head_[leave]) {
            theta = std::min(theta, ratio);
            leave = i;
          }
        }
      } else {
        // Harris two-pass: relaxed bound first, then the largest pivot within it.
        double relaxed = kInf;
        for (std::size_t i = 0; i < r; ++i) {
          if (std::fabs(w[i]) <= kPivotTol) continue;
          const double rate = -dir * w[i];
          const std::size_t j = head_[i];
          double bound = kInf;
          if (rate < 0 && std::isfinite(lo_[j])) bound = (x_[j] - lo_[j] + ftol) / -rate;
          if (rate > 0 && std::isfinite(up_[j])) bound = (up_[j] - x_[j] + ftol) / rate;
          relaxed = std::min(relaxed, bound);
        }
        if (relaxed < kInf) {
          double pivot = 0.0;
          for (std::size_t i = 0; i < r; ++i) {
            if (std::fabs(w[i]) <= kPivotTol) continue;
            const double ratio = exact_ratio(i, -dir * w[i]);
            if (ratio <= relaxed && std::fabs(w[i]) > pivot) {
              pivot = std::fabs(w[i]);
              leave = i;
              theta = std::max(0.0, ratio);
            }
          }
        }
      }

      if (flip < kInf && flip <= theta) {
        // Bound flip: the entering variable crosses to its other bound.
        for (std::size_t i = 0; i < r; ++i) x_[head_[i]] -= dir * flip * w[i];
        if (dir > 0) {
          x_[q] = up_[q];
          state_[q] = VarState::kAtUpper;
        } else {
          x_[q] = lo_[q];
          state_[q] = VarState::kAtLower;
        }
        degenerate_run_ = 0;
        continue;
      }
      if (leave == r) {
        ray_.assign(nv_, 0.0);
        if (q < nv_) ray_[q] = dir;
        for (std::size_t i = 0; i < r; ++i) {
          if (head_[i] < nv_) ray_[head_[i]] = -dir * w[i];
        }
        return LpStatus::kUnbounded;
      }

      for (std::size_t i = 0; i < r; ++i) x_[head_[i]] -= dir * theta * w[i];
      x_[q] += dir * theta;

      const std::size_t out = head_[leave];
      const double rate = -dir * w[leave];
      if (rate < 0) {
        x_[out] = lo_[out];
        state_[out] = VarState::kAtLower;
      } else {
        x_[out] = up_[out];
        state_[out] = VarState::kAtUpper;
      }
      state_[q] = VarState::kBasic;
      head_[leave] = q;

      const double wp = w[leave];
      for (std::size_t k = 0; k < r; ++k) binv_[leave * r + k] /= wp;
      for (std::size_t i = 0; i < r; ++i) {
        if (i == leave || w[i] == 0.0) continue;
        const double f = w[i];
        for (std::size_t k = 0; k < r; ++k) binv_[i * r + k] -= f * binv_[leave * r + k];
      }
      ++pivots_since_refactor_;

      if (theta <= 1e-12) {
        if (++degenerate_run_ > opt_.degenerate_limit) bland_ = true;
      } else {
        degenerate_run_ = 0;
      }
    }
  }

  LpSolution finish(LpStatus st, const std::vector<double>& cost) {
    LpSolution sol;
    sol.status = st;
    sol.iterations = iterations_;
    sol.x.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(nv_));
    sol.objective = 0.0;
    for (std::size_t j = 0; j < nv_; ++j) sol.objective += p_.cost[j] * sol.x[j];
    sol.duals.assign(rows_, 0.0);
    compute_duals(cost, sol.duals);
    if (p_.sense == Sense::kMaximize) {
      for (double& d : sol.duals) d = -d;
    }
    sol.basis = head_;
    if (st == LpStatus::kUnbounded) sol.ray = ray_;
    return sol;
  }

  const LpProblem& p_;
  LpOptions opt_;
  std::size_t rows_, nv_, ntot_;
  std::size_t max_iter_ = 0;
  std::size_t iterations_ = 0;
  std::size_t pivots_since_refactor_ = 0;
  std::size_t degenerate_run_ = 0;
  bool bland_ = false;
  std::vector<double> lo_, up_, x_, art_sign_, binv_, ray_;
  std::vector<VarState> state_;
  std::vector<std::size_t> head_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const LpOptions& options) {
  problem.validate();
  Simplex simplex(problem, options);
  return simplex.run();
}

}  // namespace robustid::lp
