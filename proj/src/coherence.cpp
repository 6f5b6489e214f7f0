#include "trineq/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "trineq/decompositions.hpp"
#include "trineq/error.hpp"
#include "trineq/kernels.hpp"

namespace trineq::coherence {

CoherenceBasis CoherenceBasis::of(const BipartiteShape& s) { return {s.dim()}; }

double l1_coherence(const ComplexMatrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    acc += kernels::abs_sum(row.first(std::min(i, row.size())));
    if (i + 1 < row.size()) acc += kernels::abs_sum(row.subspan(i + 1));
  }
  return acc;
}

double l1_coherence(const DensityMatrix& rho) { return l1_coherence(rho.matrix()); }

double l1_coherence(const PureState& psi) {
  const double s = kernels::abs_sum(psi.amplitudes());
  return psi.weight() * std::max(0.0, s * s - kernels::norm_sq(psi.amplitudes()));
}

InequalityReport triangle_check_l1(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                   double p1) {
  if (!(rho1.shape() == rho2.shape())) {
    throw Error(ErrorKind::ShapeMismatch,
                fmt::format("l1 triangle over shapes {} and {}", to_string(rho1.shape()),
                            to_string(rho2.shape())));
  }
  const double p2 = 1.0 - p1;
  const double c1 = p1 * l1_coherence(rho1);
  const double c2 = p2 * l1_coherence(rho2);
  const double middle = l1_coherence(mix(p1, rho1, rho2));
  return InequalityReport::make(std::abs(c1 - c2), middle, c1 + c2,
                                fmt::format("l1 triangle, dim={}, p1={:.17g}",
                                            rho1.shape().dim(), p1));
}

double convex_roof_l1_estimate(const Rank2Ensemble& e, std::size_t samples,
                               std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  double best = std::numeric_limits<double>::infinity();
  decompositions::for_each_decomposition(
      e, samples, rng,
      [&](const auto& d) {
        best = std::min(best, d.avg_pure_l1);
        return true;
      },
      decompositions::Measures::L1Only);
  return best;
}

RoofChainReport triangle_check_convex_roof_l1(const Rank2Ensemble& e, std::size_t samples,
                                              std::uint64_t rng_seed) {
  const double c1 = l1_coherence(e.weighted(0));
  const double c2 = l1_coherence(e.weighted(1));
  const double estimate = convex_roof_l1_estimate(e, samples, rng_seed);
  RoofChainReport r;
  r.triangle = InequalityReport::make(
      std::abs(c1 - c2), estimate, c1 + c2,
      fmt::format("convex-roof l1 chain, dim={}, p1={:.17g}, samples={}", e.shape().dim(), e.p1(),
                  samples));
  r.l1_rho = l1_coherence(density_from_ensemble(e));
  r.lower_to_l1_margin = r.l1_rho - r.triangle.lower;
  r.l1_to_estimate_margin = estimate - r.l1_rho;
  r.pass = r.triangle.pass && r.lower_to_l1_margin >= -tol::kInequality &&
           r.l1_to_estimate_margin >= -tol::kInequality;
  return r;
}

}  // namespace trineq::coherence
