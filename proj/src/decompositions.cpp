#include "trineq/decompositions.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "trineq/coherence.hpp"
#include "trineq/concurrence.hpp"
#include "trineq/error.hpp"
#include "trineq/kernels.hpp"

namespace trineq::decompositions {

ComplexMatrix MixingUnitary::matrix() const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{c * std::polar(1.0, gamma), s * std::polar(1.0, phi)},
          {-s * std::polar(1.0, -phi), c * std::polar(1.0, -gamma)}};
}

MixingUnitary haar_sample(Rng& rng) {
  MixingUnitary u;
  u.theta = std::asin(std::sqrt(rng.uniform()));
  u.gamma = 2.0 * std::numbers::pi * rng.uniform();
  u.phi = 2.0 * std::numbers::pi * rng.uniform();
  return u;
}

Rank2Ensemble remix(const Rank2Ensemble& e, const MixingUnitary& u) {
  if (u.theta == 0.0 && u.gamma == 0.0 && u.phi == 0.0) return e;
  const ComplexMatrix m = u.matrix();
  const auto big1 = e.weighted(0).subnormalized();
  const auto big2 = e.weighted(1).subnormalized();
  const std::size_t n = big1.size();
  std::vector<Complex> out1(n), out2(n);
  for (std::size_t k = 0; k < n; ++k) {
    out1[k] = m(0, 0) * big1[k] + m(0, 1) * big2[k];
    out2[k] = m(1, 0) * big1[k] + m(1, 1) * big2[k];
  }
  const double w1 = kernels::norm_sq(out1);
  const double w2 = kernels::norm_sq(out2);
  if (w1 < tol::kDegenerateWeight || w2 < tol::kDegenerateWeight) {
    throw Error(ErrorKind::DegenerateDecomposition,
                fmt::format("re-mixed weights ({:.3e}, {:.3e}) at theta={:.17g}", w1, w2,
                            u.theta));
  }
  // w1 + w2 = Tr rho = 1 up to rounding; renormalize the pair onto the simplex.
  const double total = w1 + w2;
  PureState psi1 = PureState::normalized(e.shape(), std::move(out1));
  PureState psi2 = PureState::normalized(e.shape(), std::move(out2));
  const ValidationReport check = validate_ensemble(w1 / total, 1.0 - w1 / total, psi1, psi2);
  if (!check.pass) {
    for (const auto& c : check.checks) {
      if (c.pass) continue;
      throw Error(ErrorKind::DegenerateDecomposition,
                  fmt::format("re-mixed pair fails {} (measured {:.3e}) at theta={:.17g}", c.name,
                              c.measured, u.theta));
    }
  }
  return Rank2Ensemble::make(w1 / total, std::move(psi1), std::move(psi2));
}

DecompositionSample evaluate(const Rank2Ensemble& original, const MixingUnitary& u,
                             Measures measures) {
  DecompositionSample d{u, remix(original, u)};
  for (int a = 0; a < 2; ++a) {
    const PureState weighted = d.ensemble.weighted(a);
    d.weighted_l1[a] = coherence::l1_coherence(weighted);
    if (measures == Measures::ConcurrenceAndL1) {
      d.weighted_concurrence[a] = concurrence::pure_concurrence(weighted);
    }
  }
  d.avg_pure_l1 = d.weighted_l1[0] + d.weighted_l1[1];
  d.avg_pure_concurrence = d.weighted_concurrence[0] + d.weighted_concurrence[1];
  d.diff_concurrence = std::abs(d.weighted_concurrence[0] - d.weighted_concurrence[1]);
  return d;
}

void for_each_decomposition(const Rank2Ensemble& e, std::size_t count, Rng& rng,
                            const std::function<bool(const DecompositionSample&)>& visit,
                            Measures measures) {
  if (count == 0) return;
  if (!visit(evaluate(e, MixingUnitary::identity(), measures))) return;
  for (std::size_t s = 1; s < count; ++s) {
    for (int attempt = 0;; ++attempt) {
      const MixingUnitary u = haar_sample(rng);
      try {
        if (!visit(evaluate(e, u, measures))) return;
        break;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::DegenerateDecomposition ||
            attempt + 1 >= tol::kDegenerateRetries) {
          throw;
        }
      }
    }
  }
}

std::vector<DecompositionSample> sample_decompositions(const Rank2Ensemble& e, std::size_t count,
                                                       Rng& rng) {
  std::vector<DecompositionSample> out;
  out.reserve(count);
  for_each_decomposition(e, count, rng, [&](const DecompositionSample& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

PureState example_psi1() {
  const double a = std::sqrt(3.0 / 8.0);
  const Complex b(0.0, std::sqrt(1.0 / 8.0));
  return PureState::normalized({2, 2}, {a, b, b, a});
}

PureState example_psi2() {
  const double a = std::sqrt(3.0 / 8.0);
  const double b = std::sqrt(1.0 / 8.0);
  return PureState::normalized({2, 2}, {a, b, b, a});
}

Rank2Ensemble example_ensemble(double p) {
  return Rank2Ensemble::make(p, example_psi1(), example_psi2());
}

std::vector<SweepPoint> sweep_example(std::span<const double> p_grid, std::size_t decomps_per_p,
                                      std::uint64_t rng_seed) {
  std::vector<SweepPoint> out;
  out.reserve(p_grid.size());
  for (std::size_t g = 0; g < p_grid.size(); ++g) {
    const Rank2Ensemble e = example_ensemble(p_grid[g]);
    Rng rng = Rng::stream(rng_seed, g);
    out.push_back({p_grid[g], concurrence::wootters_concurrence(density_from_ensemble(e)),
                   sample_decompositions(e, decomps_per_p, rng)});
  }
  return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t k = 0; k < points; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  out.back() = hi;
  return out;
}

}  // namespace trineq::decompositions
