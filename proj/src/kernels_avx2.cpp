// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "trineq/kernels.hpp"

namespace trineq::kernels {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// std::complex<double> is laid out as {re, im}, so one __m256d holds two values.
inline const double* as_doubles(std::span<const Complex> a) {
  return reinterpret_cast<const double*>(a.data());
}

Complex conj_dot_avx2(std::span<const Complex> a, std::span<const Complex> b) {
  const std::size_t n = std::min(a.size(), b.size());
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  // re += ar*br + ai*bi ; im += ar*bi - ai*br
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    const __m256d vb_swap = _mm256_permute_pd(vb, 0b0101);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    acc_im = _mm256_fmadd_pd(va, vb_swap, acc_im);
  }
  alignas(32) double im_lanes[4];
  _mm256_store_pd(im_lanes, acc_im);
  Complex acc{hsum(acc_re), (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3])};
  for (; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double abs_sum_avx2(std::span<const Complex> a) {
  const std::size_t n = a.size();
  const double* p = as_doubles(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(p + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(p + 2 * i + 4);
    const __m256d sq = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq));
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += std::abs(a[i]);
  return total;
}

double norm_sq_avx2(std::span<const Complex> a) {
  const std::size_t n = 2 * a.size();
  const double* p = as_doubles(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += p[i] * p[i];
  return total;
}

void symmetric2_gap_avx2(const Symmetric2Batch& in, const Symmetric2Out& out) {
  const std::size_t n = in.size();
  const __m256d zero = _mm256_setzero_pd();
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x1r = _mm256_loadu_pd(&in.x1_re[i]);
    const __m256d x1i = _mm256_loadu_pd(&in.x1_im[i]);
    const __m256d x2r = _mm256_loadu_pd(&in.x2_re[i]);
    const __m256d x2i = _mm256_loadu_pd(&in.x2_im[i]);
    const __m256d yr = _mm256_loadu_pd(&in.y_re[i]);
    const __m256d yi = _mm256_loadu_pd(&in.y_im[i]);

    const __m256d nx1 = _mm256_fmadd_pd(x1r, x1r, _mm256_mul_pd(x1i, x1i));
    const __m256d nx2 = _mm256_fmadd_pd(x2r, x2r, _mm256_mul_pd(x2i, x2i));
    const __m256d ny = _mm256_fmadd_pd(yr, yr, _mm256_mul_pd(yi, yi));
    const __m256d gap = _mm256_andnot_pd(
        sign_mask, _mm256_sub_pd(_mm256_sqrt_pd(nx1), _mm256_sqrt_pd(nx2)));

    const __m256d a = _mm256_add_pd(nx1, ny);
    const __m256d c = _mm256_add_pd(ny, nx2);
    // b = conj(x1) y + conj(y) x2
    const __m256d b_re = _mm256_add_pd(_mm256_fmadd_pd(x1r, yr, _mm256_mul_pd(x1i, yi)),
                                       _mm256_fmadd_pd(yr, x2r, _mm256_mul_pd(yi, x2i)));
    const __m256d b_im = _mm256_add_pd(_mm256_fmsub_pd(x1r, yi, _mm256_mul_pd(x1i, yr)),
                                       _mm256_fmsub_pd(yr, x2i, _mm256_mul_pd(yi, x2r)));
    // det = x1 x2 - y^2
    const __m256d det_re =
        _mm256_sub_pd(_mm256_fmsub_pd(x1r, x2r, _mm256_mul_pd(x1i, x2i)),
                      _mm256_fmsub_pd(yr, yr, _mm256_mul_pd(yi, yi)));
    const __m256d det_im =
        _mm256_sub_pd(_mm256_fmadd_pd(x1r, x2i, _mm256_mul_pd(x1i, x2r)),
                      _mm256_mul_pd(two, _mm256_mul_pd(yr, yi)));
    const __m256d abs_det =
        _mm256_sqrt_pd(_mm256_fmadd_pd(det_re, det_re, _mm256_mul_pd(det_im, det_im)));

    const __m256d sum = _mm256_sqrt_pd(_mm256_fmadd_pd(two, abs_det, _mm256_add_pd(a, c)));
    const __m256d amc = _mm256_sub_pd(a, c);
    const __m256d nb = _mm256_fmadd_pd(b_re, b_re, _mm256_mul_pd(b_im, b_im));
    const __m256d sq_gap = _mm256_sqrt_pd(_mm256_fmadd_pd(four, nb, _mm256_mul_pd(amc, amc)));
    const __m256d positive = _mm256_cmp_pd(sum, zero, _CMP_GT_OQ);
    const __m256d safe_sum = _mm256_blendv_pd(_mm256_set1_pd(1.0), sum, positive);
    const __m256d diff = _mm256_blendv_pd(
        zero, _mm256_min_pd(_mm256_div_pd(sq_gap, safe_sum), sum), positive);

    _mm256_storeu_pd(&out.diag_gap[i], gap);
    _mm256_storeu_pd(&out.sigma1[i], _mm256_mul_pd(half, _mm256_add_pd(sum, diff)));
    _mm256_storeu_pd(&out.sigma2[i],
                     _mm256_max_pd(zero, _mm256_mul_pd(half, _mm256_sub_pd(sum, diff))));
  }
  for (; i < n; ++i) {
    const auto r = detail::symmetric2_gap_one({in.x1_re[i], in.x1_im[i]},
                                              {in.x2_re[i], in.x2_im[i]},
                                              {in.y_re[i], in.y_im[i]});
    out.diag_gap[i] = r.diag_gap;
    out.sigma1[i] = r.sigma1;
    out.sigma2[i] = r.sigma2;
  }
}

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{"avx2", conj_dot_avx2, abs_sum_avx2, norm_sq_avx2,
                             symmetric2_gap_avx2};

}  // namespace trineq::kernels
