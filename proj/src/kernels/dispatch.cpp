// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <string>

#include "robustid/kernels.hpp"

namespace robustid::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(ROBUSTID_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &scalar_table();
    case Isa::kAvx2:
#if defined(ROBUSTID_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2_table();
#endif
      return nullptr;
    case Isa::kNeon:
#if defined(ROBUSTID_HAVE_NEON)
      return &neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* detect() {
  if (const char* env = std::getenv("ROBUSTID_KERNELS")) {
    const std::string want(env);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (want == isa_name(isa)) {
        if (const KernelTable* t = table_for(isa)) return t;
      }
    }
  }
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (const KernelTable* t = table_for(isa)) return t;
  }
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{detect()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) return false;
  current().store(t, std::memory_order_release);
  return true;
}

bool available(Isa isa) { return table_for(isa) != nullptr; }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().dot(a.data(), b.data(), a.size());
}

double abs_sum(std::span<const double> a) { return active().abs_sum(a.data(), a.size()); }

double sum_sq(std::span<const double> a) { return active().sum_sq(a.data(), a.size()); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  active().axpy(alpha, x.data(), y.data(), x.size());
}

void sub(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  active().sub(a.data(), b.data(), out.data(), a.size());
}

std::pair<double, double> split_abs_sum(std::span<const double> v,
                                        std::span<const std::uint8_t> mask) {
  assert(v.size() == mask.size());
  double in = 0.0, off = 0.0;
  active().split_abs_sum(v.data(), mask.data(), v.size(), &in, &off);
  return {in, off};
}

void hankel_matvec(std::span<const double> h, std::size_t rows, std::size_t cols,
                   std::span<const double> z, std::span<double> out) {
  assert(cols >= 1 && h.size() == rows + cols - 1);
  assert(z.size() == cols && out.size() == rows);
  active().hankel_matvec(h.data(), rows, cols, z.data(), out.data());
}

}  // namespace robustid::kernels
