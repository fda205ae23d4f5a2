// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace robustid {

// Dense column-major matrix. Columns are contiguous, so H*x is a sequence of
// axpy calls and H^T*v a sequence of long dot products.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

  std::span<double> col(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
  std::span<const double> col(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }
  std::vector<double> row(std::size_t r) const;

  // this * x
  std::vector<double> times(std::span<const double> x) const;
  // this^T * v
  std::vector<double> transpose_times(std::span<const double> v) const;

  double max_abs() const;

  // Rows listed in `idx`, in that order.
  Matrix select_rows(std::span<const std::size_t> idx) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Relative pivot threshold below which a triangular factor is declared singular.
inline constexpr double kRankTolerance = 1e-12;

// Householder QR of a tall matrix (rows >= cols).
class HouseholderQr {
 public:
  explicit HouseholderQr(Matrix a);

  // False when some |R_jj| <= kRankTolerance * (largest column norm of A).
  bool full_column_rank() const { return full_rank_; }

  // argmin ||A x - b||_2. Throws SingularSystemError when rank deficient.
  std::vector<double> solve(std::span<const double> b) const;

 private:
  Matrix qr_;                // R above the diagonal, reflectors below
  std::vector<double> tau_;  // reflector scales
  std::vector<double> diag_;  // diagonal of R
  bool full_rank_ = true;
};

std::vector<double> least_squares(const Matrix& a, std::span<const double> b);

bool has_full_column_rank(const Matrix& a);

// Solves the square system A x = b by LU with partial pivoting.
std::vector<double> solve_square(Matrix a, std::vector<double> b);

double norm2(std::span<const double> v);

}  // namespace robustid
