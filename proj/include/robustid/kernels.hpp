// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and
// optional vectorized versions (AVX2 on x86-64, NEON on aarch64); the active
// table is chosen once at startup from the CPU features, and can be pinned with
// the ROBUSTID_KERNELS environment variable ("scalar", "avx2", "neon").
//
// Element-wise kernels (axpy, sub, hankel_matvec) are bit-identical across
// variants: no FMA contraction is used in any of them. Reductions (dot,
// abs_sum, sum_sq, split_abs_sum) reassociate and agree to rounding.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace robustid::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*abs_sum)(const double* a, std::size_t n);
  double (*sum_sq)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out = a - b
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
  // (sum of |v_i| where mask_i != 0, sum of |v_i| where mask_i == 0)
  void (*split_abs_sum)(const double* v, const std::uint8_t* mask, std::size_t n,
                        double* in_mask, double* off_mask);
  // out_i = sum_j h[i + j] * z[j], i < rows, j < cols; h has rows + cols - 1 entries.
  void (*hankel_matvec)(const double* h, std::size_t rows, std::size_t cols,
                        const double* z, double* out);
};

const KernelTable& scalar_table();
#if defined(ROBUSTID_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(ROBUSTID_HAVE_NEON)
const KernelTable& neon_table();
#endif

// The table selected for this process.
const KernelTable& active();

// Overrides the selection; returns false when `isa` is unavailable on this CPU.
bool select(Isa isa);

bool available(Isa isa);

std::string_view isa_name(Isa isa);

// Convenience wrappers over active().
double dot(std::span<const double> a, std::span<const double> b);
double abs_sum(std::span<const double> a);
double sum_sq(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void sub(std::span<const double> a, std::span<const double> b, std::span<double> out);
std::pair<double, double> split_abs_sum(std::span<const double> v,
                                        std::span<const std::uint8_t> mask);
void hankel_matvec(std::span<const double> h, std::size_t rows, std::size_t cols,
                   std::span<const double> z, std::span<double> out);

}  // namespace robustid::kernels
