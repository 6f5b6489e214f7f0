#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and, on x86-64 builds, an AVX2+FMA variant. The variant is
// chosen once per process from CPUID; setting TRINEQ_SIMD=scalar forces the
// reference path.

#include <cstddef>
#include <span>
#include <string_view>

#include "trineq/complex_matrix.hpp"

namespace trineq::kernels {

/// Structure-of-arrays batch of 2x2 complex symmetric matrices [[x1, y], [y, x2]].
struct Symmetric2Batch {
  std::span<const double> x1_re, x1_im;
  std::span<const double> x2_re, x2_im;
  std::span<const double> y_re, y_im;
  std::size_t size() const noexcept { return x1_re.size(); }
};

/// Per-matrix outputs: | |x1| - |x2| |, and singular values sigma1 >= sigma2.
struct Symmetric2Out {
  std::span<double> diag_gap;
  std::span<double> sigma1;
  std::span<double> sigma2;
};

struct KernelTable {
  std::string_view name;
  /// sum_i conj(a_i) * b_i
  Complex (*conj_dot)(std::span<const Complex> a, std::span<const Complex> b);
  /// sum_i |a_i|
  double (*abs_sum)(std::span<const Complex> a);
  /// sum_i |a_i|^2
  double (*norm_sq)(std::span<const Complex> a);
  void (*symmetric2_gap)(const Symmetric2Batch& in, const Symmetric2Out& out);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table() noexcept;
const KernelTable& active() noexcept;

inline Complex conj_dot(std::span<const Complex> a, std::span<const Complex> b) {
  return active().conj_dot(a, b);
}
inline double abs_sum(std::span<const Complex> a) { return active().abs_sum(a); }
inline double norm_sq(std::span<const Complex> a) { return active().norm_sq(a); }
inline void symmetric2_gap(const Symmetric2Batch& in, const Symmetric2Out& out) {
  active().symmetric2_gap(in, out);
}

namespace detail {
// Closed form shared by both variants so the lane arithmetic matches the
// reference exactly up to summation order.
struct Symmetric2Scalar {
  double diag_gap, sigma1, sigma2;
};
Symmetric2Scalar symmetric2_gap_one(Complex x1, Complex x2, Complex y) noexcept;
}  // namespace detail

}  // namespace trineq::kernels
