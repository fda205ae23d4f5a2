// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "robustid/kernels.hpp"

namespace robustid::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double abs_sum_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
  return s;
}

double sum_sq_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void sub_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void split_abs_sum_scalar(const double* v, const std::uint8_t* mask, std::size_t n,
                          double* in_mask, double* off_mask) {
  double in = 0.0, off = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i] != 0) {
      in += std::fabs(v[i]);
    } else {
      off += std::fabs(v[i]);
    }
  }
  *in_mask = in;
  *off_mask = off;
}

void hankel_matvec_scalar(const double* h, std::size_t rows, std::size_t cols,
                          const double* z, double* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc = acc + z[j] * h[i + j];
    out[i] = acc;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar,        dot_scalar,  abs_sum_scalar,
                                 sum_sq_scalar,       axpy_scalar, sub_scalar,
                                 split_abs_sum_scalar, hankel_matvec_scalar};
  return table;
}

}  // namespace robustid::kernels
