#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trineq/complex_matrix.hpp"
#include "trineq/report.hpp"
#include "trineq/states.hpp"

namespace trineq::concurrence {

/// Index pair of the antisymmetric generators
///   L_m = |i><j| - |j><i| on A (i < j) and L_n = |k><l| - |l><k| on B (k < l).
struct GeneratorPair {
  std::pair<std::size_t, std::size_t> m_index;
  std::pair<std::size_t, std::size_t> n_index;
  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
};

/// All d1(d1-1)/2 * d2(d2-1)/2 pairs, lexicographic in (i, j) then (k, l).
std::vector<GeneratorPair> generator_pairs(const BipartiteShape& shape);

/// 2x2 complex symmetric matrix of spin-flip overlaps; `generator` is absent
/// for the global two-qubit matrix.
struct TauMatrix {
  ComplexMatrix entries;
  std::optional<GeneratorPair> generator;
};

/// Both pure-state expressions before weighting.
struct PureConcurrenceForms {
  double purity_form = 0.0;    // sqrt(2 (1 - Tr rho_A^2))
  double minor_sum_form = 0.0; // sqrt(4 sum |phi_ik phi_jl - phi_il phi_jk|^2)
};

PureConcurrenceForms pure_concurrence_forms(const PureState& psi);

/// weight * C(psi) with C from the reduced purity. The generator-minor sum is
/// evaluated alongside; FormulaMismatch is thrown if the squared values differ
/// by more than 1e-8.
double pure_concurrence(const PureState& psi);

struct WoottersSpectrum {
  /// Eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)), descending.
  std::array<double, 4> lambda{};
  double concurrence = 0.0;
};

/// lambda_i as singular values of sqrt(rho) (Y (x) Y) conj(sqrt(rho)), i.e.
/// square roots of the spectrum of sqrt(rho) rho~ sqrt(rho) = B B^dagger.
WoottersSpectrum wootters_spectrum(const DensityMatrix& rho);
/// Same quantity through the explicit Hermitian matrix R.
WoottersSpectrum wootters_spectrum_r_route(const DensityMatrix& rho);

/// max{0, l1 - l2 - l3 - l4}; 2x2 shapes only (WrongShape otherwise).
double wootters_concurrence(const DensityMatrix& rho);

/// tau_ab = <Psi_a| (Y (x) Y) |Psi_b*>, |Psi_a> = sqrt(p_a)|psi_a>.
TauMatrix tau_2qubit(const Rank2Ensemble& e);

/// sigma1 - sigma2 of tau_2qubit(e).
double rank2_concurrence_2qubit(const Rank2Ensemble& e);

/// tau_ab = <Psi_a| L_m (x) L_n |Psi_b*>.
TauMatrix tau_mn(const Rank2Ensemble& e, const GeneratorPair& g);

/// The generator-resolved pieces of the high-dimensional bound.
struct GeneratorTerms {
  std::vector<double> gap;      // sigma1^mn - sigma2^mn
  std::vector<double> abs_t11;  // |<Psi_1|L_m L_n|Psi_1*>|
  std::vector<double> abs_t22;  // |<Psi_2|L_m L_n|Psi_2*>|
};

GeneratorTerms generator_terms(const Rank2Ensemble& e);

/// sqrt(sum_mn (sigma1^mn - sigma2^mn)^2), a lower bound on C(rho).
double highdim_lower_bound(const Rank2Ensemble& e);

/// |C(Psi1) - C(Psi2)| <= middle <= C(Psi1) + C(Psi2), with the middle term
/// the exact rank-2 concurrence for two qubits and the lower bound otherwise.
InequalityReport triangle_check_concurrence(const Rank2Ensemble& e);

/// Max of the decomposition-averaged pure concurrence over the identity
/// mixing plus `samples - 1` Haar-random 2x2 re-mixings from `rng_seed`.
double coa_estimate(const Rank2Ensemble& e, std::size_t samples, std::uint64_t rng_seed);

}  // namespace trineq::concurrence
