#pragma once

#include "trineq/random.hpp"
#include "trineq/states.hpp"

namespace trineq::sampling {

/// Haar-random pure state: normalized complex Gaussian vector.
PureState random_pure_state(const BipartiteShape& shape, Rng& rng);

/// p1 uniform on (0, 1) and two independent Haar-random components; redraws
/// in the measure-zero event that the ensemble invariants fail.
Rank2Ensemble random_ensemble(const BipartiteShape& shape, Rng& rng);

/// Random density matrix G G^dagger / Tr(G G^dagger) with G a dim x rank
/// complex Gaussian matrix; rank 1 gives a pure state.
DensityMatrix random_density(const BipartiteShape& shape, std::size_t rank, Rng& rng);

/// 2x2 complex symmetric matrix with the three independent entries uniform
/// in the unit disc.
ComplexMatrix random_symmetric2(Rng& rng);

}  // namespace trineq::sampling
