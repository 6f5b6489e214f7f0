#include "trineq/sampling.hpp"

#include "trineq/error.hpp"

namespace trineq::sampling {

PureState random_pure_state(const BipartiteShape& shape, Rng& rng) {
  std::vector<Complex> amps(shape.dim());
  for (auto& z : amps) z = rng.complex_normal();
  return PureState::normalized(shape, std::move(amps));
}

Rank2Ensemble random_ensemble(const BipartiteShape& shape, Rng& rng) {
  for (;;) {
    const double p1 = rng.uniform_open();
    PureState psi1 = random_pure_state(shape, rng);
    PureState psi2 = random_pure_state(shape, rng);
    if (validate_ensemble(p1, 1.0 - p1, psi1, psi2).pass) {
      return Rank2Ensemble::make(p1, std::move(psi1), std::move(psi2));
    }
  }
}

DensityMatrix random_density(const BipartiteShape& shape, std::size_t rank, Rng& rng) {
  const std::size_t n = shape.dim();
  ComplexMatrix g(n, rank);
  for (auto& z : g.entries()) z = rng.complex_normal();
  ComplexMatrix m = g * g.adjoint();
  m *= Complex(1.0 / m.trace().real());
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) m(j, i) = std::conj(m(i, j));
  }
  return DensityMatrix::from_matrix(shape, std::move(m));
}

ComplexMatrix random_symmetric2(Rng& rng) {
  const Complex x1 = rng.unit_disc();
  const Complex x2 = rng.unit_disc();
  const Complex y = rng.unit_disc();
  return {{x1, y}, {y, x2}};
}

}  // namespace trineq::sampling
