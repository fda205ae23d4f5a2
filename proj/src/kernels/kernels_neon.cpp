// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

// NEON is baseline on aarch64, so this file needs no extra target flags.

#include <arm_neon.h>

#include <cmath>

#include "robustid/kernels.hpp"

namespace robustid::kernels {
namespace {

inline double hsum(float64x2_t v) { return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1); }

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double s = hsum(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double abs_sum_neon(const double* a, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vabsq_f64(vld1q_f64(a + i)));
    acc1 = vaddq_f64(acc1, vabsq_f64(vld1q_f64(a + i + 2)));
  }
  double s = hsum(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += std::fabs(a[i]);
  return s;
}

double sum_sq_neon(const double* a, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float64x2_t x0 = vld1q_f64(a + i);
    float64x2_t x1 = vld1q_f64(a + i + 2);
    acc0 = vaddq_f64(acc0, vmulq_f64(x0, x0));
    acc1 = vaddq_f64(acc1, vmulq_f64(x1, x1));
  }
  double s = hsum(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * a[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void sub_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void split_abs_sum_neon(const double* v, const std::uint8_t* mask, std::size_t n,
                        double* in_mask, double* off_mask) {
  float64x2_t acc_in = vdupq_n_f64(0.0);
  float64x2_t acc_off = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t sel = {mask[i] != 0 ? ~0ull : 0ull, mask[i + 1] != 0 ? ~0ull : 0ull};
    float64x2_t a = vabsq_f64(vld1q_f64(v + i));
    float64x2_t zero = vdupq_n_f64(0.0);
    acc_in = vaddq_f64(acc_in, vbslq_f64(sel, a, zero));
    acc_off = vaddq_f64(acc_off, vbslq_f64(sel, zero, a));
  }
  double in = hsum(acc_in);
  double off = hsum(acc_off);
  for (; i < n; ++i) {
    if (mask[i] != 0) {
      in += std::fabs(v[i]);
    } else {
      off += std::fabs(v[i]);
    }
  }
  *in_mask = in;
  *off_mask = off;
}

void hankel_matvec_neon(const double* h, std::size_t rows, std::size_t cols, const double* z,
                        double* out) {
  std::size_t i = 0;
  for (; i + 2 <= rows; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < cols; ++j) {
      acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(z[j]), vld1q_f64(h + i + j)));
    }
    vst1q_f64(out + i, acc);
  }
  for (; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc = acc + z[j] * h[i + j];
    out[i] = acc;
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Isa::kNeon,        dot_neon,  abs_sum_neon,
                                 sum_sq_neon,       axpy_neon, sub_neon,
                                 split_abs_sum_neon, hankel_matvec_neon};
  return table;
}

}  // namespace robustid::kernels
