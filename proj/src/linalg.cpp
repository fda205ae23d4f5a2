// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "robustid/error.hpp"
#include "robustid/kernels.hpp"

namespace robustid {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix out(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged row list");
    std::size_t j = 0;
    for (double v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

std::vector<double> Matrix::row(std::size_t r) const {
  std::vector<double> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

std::vector<double> Matrix::times(std::span<const double> x) const {
  if (x.size() != cols_) throw DimensionError("Matrix::times: size mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t c = 0; c < cols_; ++c) kernels::axpy(x[c], col(c), out);
  return out;
}

std::vector<double> Matrix::transpose_times(std::span<const double> v) const {
  if (v.size() != rows_) throw DimensionError("Matrix::transpose_times: size mismatch");
  std::vector<double> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = kernels::dot(col(c), v);
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(idx.size(), cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t k = 0; k < idx.size(); ++k) out(k, c) = (*this)(idx[k], c);
  }
  return out;
}

HouseholderQr::HouseholderQr(Matrix a) : qr_(std::move(a)) {
  const std::size_t rows = qr_.rows();
  const std::size_t cols = qr_.cols();
  if (rows < cols) throw DimensionError("HouseholderQr: need rows >= cols");
  tau_.assign(cols, 0.0);
  diag_.assign(cols, 0.0);

  double scale = 0.0;
  for (std::size_t c = 0; c < cols; ++c) scale = std::max(scale, norm2(qr_.col(c)));

  for (std::size_t k = 0; k < cols; ++k) {
    auto col = qr_.col(k).subspan(k);
    const double alpha = norm2(col);
    if (alpha == 0.0) {
      diag_[k] = 0.0;
      continue;
    }
    const double rkk = col[0] > 0 ? -alpha : alpha;
    // v = x - rkk e1, stored in place with v0 kept explicitly.
    col[0] -= rkk;
    const double vnorm2 = kernels::sum_sq(col);
    tau_[k] = vnorm2 > 0 ? 2.0 / vnorm2 : 0.0;
    diag_[k] = rkk;
    for (std::size_t j = k + 1; j < cols; ++j) {
      auto target = qr_.col(j).subspan(k);
      const double s = tau_[k] * kernels::dot(col, target);
      kernels::axpy(-s, col, target);
    }
  }
  for (std::size_t k = 0; k < cols; ++k) {
    if (!(std::fabs(diag_[k]) > kRankTolerance * scale)) full_rank_ = false;
  }
}

std::vector<double> HouseholderQr::solve(std::span<const double> b) const {
  const std::size_t rows = qr_.rows();
  const std::size_t cols = qr_.cols();
  if (b.size() != rows) throw DimensionError("least squares: rhs length mismatch");
  if (!full_rank_) throw SingularSystemError("least squares: matrix is rank deficient");
  std::vector<double> qtb(b.begin(), b.end());
  for (std::size_t k = 0; k < cols; ++k) {
    auto v = qr_.col(k).subspan(k);
    std::span<double> tail(qtb.data() + k, rows - k);
    const double s = tau_[k] * kernels::dot(v, tail);
    kernels::axpy(-s, v, tail);
  }
  std::vector<double> x(cols);
  for (std::size_t k = cols; k-- > 0;) {
    double s = qtb[k];
    for (std::size_t j = k + 1; j < cols; ++j) s -= qr_(k, j) * x[j];
    x[k] = s / diag_[k];
  }
  return x;
}

std::vector<double> least_squares(const Matrix& a, std::span<const double> b) {
  return HouseholderQr(a).solve(b);
}

bool has_full_column_rank(const Matrix& a) {
  if (a.rows() < a.cols()) return false;
  return HouseholderQr(a).full_column_rank();
}

std::vector<double> solve_square(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionError("solve_square: shape mismatch");
  const double scale = a.max_abs();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
    }
    if (!(std::fabs(a(piv, k)) > kRankTolerance * scale)) {
      throw SingularSystemError("solve_square: singular matrix");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
    x[k] = s / a(k, k);
  }
  return x;
}

double norm2(std::span<const double> v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::fabs(x));
  if (scale == 0.0) return 0.0;
  if (scale > 1e150 || scale < 1e-150) {
    double s = 0.0;
    for (double x : v) s += (x / scale) * (x / scale);
    return scale * std::sqrt(s);
  }
  return std::sqrt(kernels::sum_sq(v));
}

}  // namespace robustid
