#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "trineq/complex_matrix.hpp"
#include "trineq/random.hpp"
#include "trineq/states.hpp"

namespace trineq::decompositions {

/// U = [[cos t e^{i g}, sin t e^{i f}], [-sin t e^{-i f}, cos t e^{-i g}]]
/// with t in [0, pi/2] and g, f in [0, 2 pi). The global phase of U(2) is
/// dropped; no measured quantity depends on it.
struct MixingUnitary {
  double theta = 0.0;
  double gamma = 0.0;
  double phi = 0.0;

  static MixingUnitary identity() { return {}; }
  ComplexMatrix matrix() const;
};

/// Haar-distributed draw: theta = asin(sqrt(u)), gamma and phi uniform.
/// Consumes exactly three uniforms from `rng`.
MixingUnitary haar_sample(Rng& rng);

/// (|Psi1'>, |Psi2'>)^T = U (|Psi1>, |Psi2>)^T on the subnormalized pair.
/// Throws DegenerateDecomposition if a new weight is below 1e-10 or the new
/// pair fails the ensemble invariants (near-parallel components). The
/// identity mixing returns `e` unchanged.
Rank2Ensemble remix(const Rank2Ensemble& e, const MixingUnitary& u);

struct DecompositionSample {
  MixingUnitary unitary;
  Rank2Ensemble ensemble;
  /// C(|Psi_a'>) = p_a' C(psi_a')
  std::array<double, 2> weighted_concurrence{};
  /// C_l1(p_a' |psi_a'><psi_a'|)
  std::array<double, 2> weighted_l1{};
  /// C(|Psi1'>) + C(|Psi2'>)
  double avg_pure_concurrence = 0.0;
  /// C_l1(|Psi1'>) + C_l1(|Psi2'>)
  double avg_pure_l1 = 0.0;
  /// |C(|Psi1'>) - C(|Psi2'>)|
  double diff_concurrence = 0.0;
};

enum class Measures { ConcurrenceAndL1, L1Only };

DecompositionSample evaluate(const Rank2Ensemble& original, const MixingUnitary& u,
                             Measures measures = Measures::ConcurrenceAndL1);

/// Visits `count` decompositions of `e`: the identity mixing first, then Haar
/// draws from `rng`. A draw that yields a degenerate weight is redrawn, up to
/// 100 times, before DegenerateDecomposition propagates. Returning false from
/// `visit` stops early.
void for_each_decomposition(const Rank2Ensemble& e, std::size_t count, Rng& rng,
                            const std::function<bool(const DecompositionSample&)>& visit,
                            Measures measures = Measures::ConcurrenceAndL1);

std::vector<DecompositionSample> sample_decompositions(const Rank2Ensemble& e, std::size_t count,
                                                       Rng& rng);

/// Two-qubit example family
///   psi1 = sqrt(3/8)(|00> + |11>) + i sqrt(1/8)(|01> + |10>)
///   psi2 = sqrt(3/8)(|00> + |11>) +   sqrt(1/8)(|01> + |10>)
PureState example_psi1();
PureState example_psi2();
/// P |psi1><psi1| + (1 - P) |psi2><psi2|, P in (0, 1).
Rank2Ensemble example_ensemble(double p);

struct SweepPoint {
  double p = 0.0;
  double c_rho = 0.0;
  std::vector<DecompositionSample> samples;
};

/// For each P: the example ensemble, C(rho) from Wootters' formula, and
/// `decomps_per_p` decompositions (identity first) from stream (seed, index).
std::vector<SweepPoint> sweep_example(std::span<const double> p_grid, std::size_t decomps_per_p,
                                      std::uint64_t rng_seed);

/// `points` values evenly spaced on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

}  // namespace trineq::decompositions
