#include <doctest.h>

#include <cmath>
#include <vector>

#include "trineq/kernels.hpp"
#include "trineq/random.hpp"

using namespace trineq;

namespace {

std::vector<Complex> random_vector(std::size_t n, Rng& rng) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar kernels match direct sums") {
    Rng rng(1);
    const auto& k = kernels::scalar_table();
    for (std::size_t n = 0; n < 40; ++n) {
      const auto a = random_vector(n, rng);
      const auto b = random_vector(n, rng);
      Complex dot = 0.0;
      double abs_sum = 0.0, norm_sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dot += std::conj(a[i]) * b[i];
        abs_sum += std::abs(a[i]);
        norm_sq += std::norm(a[i]);
      }
      CHECK(std::abs(k.conj_dot(a, b) - dot) < 1e-12 * (1.0 + n));
      CHECK(rel(k.abs_sum(a), abs_sum) < 1e-13);
      CHECK(rel(k.norm_sq(a), norm_sq) < 1e-13);
    }
  }

  TEST_CASE("AVX2 kernels are equivalent to the scalar reference") {
    const kernels::KernelTable* simd = kernels::avx2_table();
    if (simd == nullptr) {
      MESSAGE("AVX2 variant unavailable on this build or CPU");
      return;
    }
    const auto& ref = kernels::scalar_table();
    Rng rng(2);
    for (std::size_t n = 0; n < 67; ++n) {
      const auto a = random_vector(n, rng);
      const auto b = random_vector(n, rng);
      CHECK(std::abs(simd->conj_dot(a, b) - ref.conj_dot(a, b)) < 1e-12 * (1.0 + n));
      CHECK(rel(simd->abs_sum(a), ref.abs_sum(a)) < 1e-13);
      CHECK(rel(simd->norm_sq(a), ref.norm_sq(a)) < 1e-13);
    }

    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 1000u}) {
      std::vector<double> x1r(n), x1i(n), x2r(n), x2i(n), yr(n), yi(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Complex x1 = rng.unit_disc(), x2 = rng.unit_disc(), y = rng.unit_disc();
        x1r[i] = x1.real(), x1i[i] = x1.imag(), x2r[i] = x2.real(), x2i[i] = x2.imag();
        yr[i] = y.real(), yi[i] = y.imag();
      }
      // A zero matrix and an exactly diagonal one exercise the guarded lanes.
      if (n >= 8) {
        x1r[1] = x1i[1] = x2r[1] = x2i[1] = yr[1] = yi[1] = 0.0;
        yr[6] = yi[6] = 0.0;
      }
      std::vector<double> g0(n), s10(n), s20(n), g1(n), s11(n), s21(n);
      const kernels::Symmetric2Batch in{x1r, x1i, x2r, x2i, yr, yi};
      ref.symmetric2_gap(in, {g0, s10, s20});
      simd->symmetric2_gap(in, {g1, s11, s21});
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(g0[i] - g1[i]) < 1e-14);
        CHECK(std::abs(s10[i] - s11[i]) < 1e-14);
        CHECK(std::abs(s20[i] - s21[i]) < 1e-14);
      }
    }
  }

  TEST_CASE("the active table is one of the two variants") {
    const auto name = kernels::active().name;
    CHECK((name == kernels::scalar_table().name ||
           (kernels::avx2_table() && name == kernels::avx2_table()->name)));
  }
}
