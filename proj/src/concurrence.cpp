#include "trineq/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "trineq/decompositions.hpp"
#include "trineq/error.hpp"
#include "trineq/kernels.hpp"
#include "trineq/linalg.hpp"

namespace trineq::concurrence {

namespace {

void require_two_qubit(const BipartiteShape& s, const char* what) {
  if (!s.is_two_qubit()) {
    throw Error(ErrorKind::WrongShape, fmt::format("{} needs a 2x2 shape, got {}", what, to_string(s)));
  }
}

// (Y (x) Y) conj(v) for a 4-vector; Y (x) Y is the anti-diagonal (-1, 1, 1, -1).
std::array<Complex, 4> spin_flipped(std::span<const Complex> v) {
  return {-std::conj(v[3]), std::conj(v[2]), std::conj(v[1]), -std::conj(v[0])};
}

// <a| L_m (x) L_n |b*>
Complex generator_element(std::span<const Complex> a, std::span<const Complex> b,
                          const BipartiteShape& s, const GeneratorPair& g) {
  const auto [i, j] = g.m_index;
  const auto [k, l] = g.n_index;
  const std::size_t ik = s.index(i, k), il = s.index(i, l), jk = s.index(j, k), jl = s.index(j, l);
  return std::conj(a[ik] * b[jl] - a[il] * b[jk] - a[jk] * b[il] + a[jl] * b[ik]);
}

void validate_generator(const BipartiteShape& s, const GeneratorPair& g) {
  const auto [i, j] = g.m_index;
  const auto [k, l] = g.n_index;
  if (!(i < j && j < s.d1 && k < l && l < s.d2)) {
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("generator pair ({},{})x({},{}) invalid for shape {}", i, j, k, l,
                            to_string(s)));
  }
}

}  // namespace

std::vector<GeneratorPair> generator_pairs(const BipartiteShape& shape) {
  std::vector<GeneratorPair> out;
  out.reserve(shape.d1 * (shape.d1 - 1) / 2 * (shape.d2 * (shape.d2 - 1) / 2));
  for (std::size_t i = 0; i < shape.d1; ++i)
    for (std::size_t j = i + 1; j < shape.d1; ++j)
      for (std::size_t k = 0; k < shape.d2; ++k)
        for (std::size_t l = k + 1; l < shape.d2; ++l) out.push_back({{i, j}, {k, l}});
  return out;
}

PureConcurrenceForms pure_concurrence_forms(const PureState& psi) {
  const auto& s = psi.shape();
  const ComplexMatrix rho_a = partial_trace_A(psi);
  const double purity = kernels::norm_sq(rho_a.entries());

  double minors = 0.0;
  for (std::size_t i = 0; i < s.d1; ++i)
    for (std::size_t j = i + 1; j < s.d1; ++j)
      for (std::size_t k = 0; k < s.d2; ++k)
        for (std::size_t l = k + 1; l < s.d2; ++l)
          minors += std::norm(psi.amplitude(i, k) * psi.amplitude(j, l) -
                              psi.amplitude(i, l) * psi.amplitude(j, k));

  return {std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))), std::sqrt(4.0 * minors)};
}

double pure_concurrence(const PureState& psi) {
  const auto forms = pure_concurrence_forms(psi);
  // Compared on the squared scale: near product states the purity form carries
  // ~1e-8 of sqrt-amplified rounding while its square is accurate to ~1e-16.
  const double sq_gap = std::abs(forms.purity_form * forms.purity_form -
                                 forms.minor_sum_form * forms.minor_sum_form);
  if (sq_gap > tol::kPureFormulaAgreement) {
    throw Error(ErrorKind::FormulaMismatch,
                fmt::format("purity form {:.17g} vs minor sum {:.17g}", forms.purity_form,
                            forms.minor_sum_form));
  }
  return psi.weight() * forms.purity_form;
}

WoottersSpectrum wootters_spectrum(const DensityMatrix& rho) {
  require_two_qubit(rho.shape(), "Wootters concurrence");
  const ComplexMatrix root = linalg::psd_sqrt(rho.matrix());
  const ComplexMatrix b = root * sigma_yy() * root.conj();
  const auto sv = linalg::singular_values(b);
  WoottersSpectrum out;
  std::copy_n(sv.begin(), 4, out.lambda.begin());
  out.concurrence = std::max(0.0, out.lambda[0] - out.lambda[1] - out.lambda[2] - out.lambda[3]);
  return out;
}

WoottersSpectrum wootters_spectrum_r_route(const DensityMatrix& rho) {
  require_two_qubit(rho.shape(), "Wootters concurrence");
  const ComplexMatrix root = linalg::psd_sqrt(rho.matrix());
  const ComplexMatrix inner = root * spin_flip(rho) * root;
  const auto es = linalg::hermitian_eigensystem(linalg::psd_sqrt(inner));
  WoottersSpectrum out;
  for (std::size_t k = 0; k < 4; ++k) out.lambda[k] = std::max(0.0, es.values[k]);
  out.concurrence = std::max(0.0, out.lambda[0] - out.lambda[1] - out.lambda[2] - out.lambda[3]);
  return out;
}

double wootters_concurrence(const DensityMatrix& rho) { return wootters_spectrum(rho).concurrence; }

TauMatrix tau_2qubit(const Rank2Ensemble& e) {
  require_two_qubit(e.shape(), "tau_2qubit");
  const std::array<std::vector<Complex>, 2> big{e.weighted(0).subnormalized(),
                                                e.weighted(1).subnormalized()};
  TauMatrix t{ComplexMatrix(2, 2), std::nullopt};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const auto flipped = spin_flipped(big[b]);
      t.entries(a, b) = kernels::conj_dot(big[a], flipped);
    }
  const double asym = std::abs(t.entries(0, 1) - t.entries(1, 0));
  if (asym > tol::kTauSymmetric) {
    throw Error(ErrorKind::NotSymmetric, fmt::format("tau asymmetry {:.3e}", asym));
  }
  const Complex off = 0.5 * (t.entries(0, 1) + t.entries(1, 0));
  t.entries(0, 1) = off;
  t.entries(1, 0) = off;
  return t;
}

double rank2_concurrence_2qubit(const Rank2Ensemble& e) {
  const auto gap = linalg::symmetric2_svd_gap(tau_2qubit(e).entries);
  return gap.pair.sigma1 - gap.pair.sigma2;
}

TauMatrix tau_mn(const Rank2Ensemble& e, const GeneratorPair& g) {
  validate_generator(e.shape(), g);
  const std::array<std::vector<Complex>, 2> big{e.weighted(0).subnormalized(),
                                                e.weighted(1).subnormalized()};
  TauMatrix t{ComplexMatrix(2, 2), g};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t.entries(a, b) = generator_element(big[a], big[b], e.shape(), g);
  return t;
}

GeneratorTerms generator_terms(const Rank2Ensemble& e) {
  const auto pairs = generator_pairs(e.shape());
  const std::size_t n = pairs.size();
  const std::array<std::vector<Complex>, 2> big{e.weighted(0).subnormalized(),
                                                e.weighted(1).subnormalized()};
  std::vector<double> x1r(n), x1i(n), x2r(n), x2i(n), yr(n), yi(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Complex t11 = generator_element(big[0], big[0], e.shape(), pairs[p]);
    const Complex t22 = generator_element(big[1], big[1], e.shape(), pairs[p]);
    const Complex t12 = generator_element(big[0], big[1], e.shape(), pairs[p]);
    x1r[p] = t11.real();
    x1i[p] = t11.imag();
    x2r[p] = t22.real();
    x2i[p] = t22.imag();
    yr[p] = t12.real();
    yi[p] = t12.imag();
  }
  std::vector<double> diag_gap(n), s1(n), s2(n);
  kernels::symmetric2_gap({x1r, x1i, x2r, x2i, yr, yi}, {diag_gap, s1, s2});

  GeneratorTerms out{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t p = 0; p < n; ++p) {
    out.gap[p] = s1[p] - s2[p];
    out.abs_t11[p] = std::hypot(x1r[p], x1i[p]);
    out.abs_t22[p] = std::hypot(x2r[p], x2i[p]);
  }
  return out;
}

double highdim_lower_bound(const Rank2Ensemble& e) {
  double acc = 0.0;
  for (double g : generator_terms(e).gap) acc += g * g;
  return std::sqrt(acc);
}

InequalityReport triangle_check_concurrence(const Rank2Ensemble& e) {
  const double c1 = pure_concurrence(e.weighted(0));
  const double c2 = pure_concurrence(e.weighted(1));
  const bool two_qubit = e.shape().is_two_qubit();
  const double middle = two_qubit ? rank2_concurrence_2qubit(e) : highdim_lower_bound(e);
  return InequalityReport::make(
      std::abs(c1 - c2), middle, c1 + c2,
      fmt::format("{} rank-2 ensemble, p1={:.17g}, middle={}", to_string(e.shape()), e.p1(),
                  two_qubit ? "C(rho)" : "generator lower bound"));
}

double coa_estimate(const Rank2Ensemble& e, std::size_t samples, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  double best = 0.0;
  decompositions::for_each_decomposition(e, samples, rng, [&](const auto& d) {
    best = std::max(best, d.avg_pure_concurrence);
    return true;
  });
  return best;
}

}  // namespace trineq::concurrence
