#include <algorithm>
#include <cmath>

#include "trineq/kernels.hpp"

namespace trineq::kernels {

namespace detail {

Symmetric2Scalar symmetric2_gap_one(Complex x1, Complex x2, Complex y) noexcept {
  const double ax1 = std::sqrt(std::norm(x1));
  const double ax2 = std::sqrt(std::norm(x2));
  const double ny = std::norm(y);
  // Gram matrix M^dagger M = [[a, b], [conj(b), c]].
  const double a = std::norm(x1) + ny;
  const double c = ny + std::norm(x2);
  const Complex b = std::conj(x1) * y + std::conj(y) * x2;
  const double abs_det = std::abs(x1 * x2 - y * y);
  // sigma1 + sigma2 = sqrt(||M||_F^2 + 2|det M|) has no cancellation;
  // sigma1^2 - sigma2^2 = sqrt((a - c)^2 + 4|b|^2) is the Gram eigenvalue gap.
  const double sum = std::sqrt(a + c + 2.0 * abs_det);
  const double sq_gap = std::sqrt((a - c) * (a - c) + 4.0 * std::norm(b));
  const double diff = sum > 0.0 ? std::min(sq_gap / sum, sum) : 0.0;
  return {std::abs(ax1 - ax2), 0.5 * (sum + diff), std::max(0.0, 0.5 * (sum - diff))};
}

}  // namespace detail

namespace {

Complex conj_dot_scalar(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double abs_sum_scalar(std::span<const Complex> a) {
  double acc = 0.0;
  for (Complex z : a) acc += std::abs(z);
  return acc;
}

double norm_sq_scalar(std::span<const Complex> a) {
  double acc = 0.0;
  for (Complex z : a) acc += std::norm(z);
  return acc;
}

void symmetric2_gap_scalar(const Symmetric2Batch& in, const Symmetric2Out& out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto r = detail::symmetric2_gap_one({in.x1_re[i], in.x1_im[i]},
                                              {in.x2_re[i], in.x2_im[i]},
                                              {in.y_re[i], in.y_im[i]});
    out.diag_gap[i] = r.diag_gap;
    out.sigma1[i] = r.sigma1;
    out.sigma2[i] = r.sigma2;
  }
}

constexpr KernelTable kScalar{"scalar", conj_dot_scalar, abs_sum_scalar, norm_sq_scalar,
                              symmetric2_gap_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace trineq::kernels
