#pragma once

#include <cstdint>

#include "trineq/complex_matrix.hpp"
#include "trineq/report.hpp"
#include "trineq/states.hpp"

namespace trineq::coherence {

/// Reference basis for coherence: the computational basis {|i>} of the
/// flattened d1*d2 space. Other bases are reached by DensityMatrix::in_basis.
struct CoherenceBasis {
  std::size_t dimension = 2;
  static CoherenceBasis of(const BipartiteShape& s);
};

/// sum_{i != j} |m_ij|
double l1_coherence(const ComplexMatrix& m);
double l1_coherence(const DensityMatrix& rho);
/// C_l1(p |psi><psi|) = p ((sum_i |psi_i|)^2 - 1), with p the state weight.
double l1_coherence(const PureState& psi);

/// |C(p1 rho1) - C(p2 rho2)| <= C(p1 rho1 + p2 rho2) <= C(p1 rho1) + C(p2 rho2)
/// for l1 coherence, p2 = 1 - p1. Either component may be pure or mixed.
InequalityReport triangle_check_l1(const DensityMatrix& rho1, const DensityMatrix& rho2, double p1);

/// Upper estimate of the convex-roof l1 coherence: the minimum of
/// sum_a C_l1(|Psi_a'>) over the identity mixing and `samples - 1` Haar
/// re-mixings drawn from `rng_seed`.
double convex_roof_l1_estimate(const Rank2Ensemble& e, std::size_t samples,
                               std::uint64_t rng_seed);

/// Full chain lower <= C_l1(rho) <= roof estimate <= upper.
struct RoofChainReport {
  /// lower = |C_l1(Psi1) - C_l1(Psi2)|, middle = roof estimate,
  /// upper = C_l1(Psi1) + C_l1(Psi2).
  InequalityReport triangle;
  double l1_rho = 0.0;
  double lower_to_l1_margin = 0.0;     // C_l1(rho) - lower
  double l1_to_estimate_margin = 0.0;  // estimate - C_l1(rho)
  bool pass = false;
};

RoofChainReport triangle_check_convex_roof_l1(const Rank2Ensemble& e, std::size_t samples,
                                              std::uint64_t rng_seed);

}  // namespace trineq::coherence
