#pragma once

// Monte Carlo verification campaigns. Each campaign splits its samples into a
// fixed number of chunks; chunk c draws from Rng::stream(seed, c), so results
// do not depend on how many worker threads run them.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "trineq/states.hpp"

namespace trineq::campaigns {

struct Violation {
  std::size_t index = 0;
  std::string context;
  nlohmann::json inputs;
  nlohmann::json margins;
};

struct CampaignResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// Smallest slack seen; negative beyond the tolerance means a violation.
  double worst_margin = std::numeric_limits<double>::infinity();
  /// Largest disagreement for two-route equivalence campaigns.
  double max_abs_error = 0.0;
  /// Up to kMaxRecorded violations, in sample order.
  std::vector<Violation> recorded;

  static constexpr std::size_t kMaxRecorded = 16;
  bool ok() const noexcept { return violations == 0; }
  nlohmann::json to_json() const;
};

struct Options {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  /// Decompositions per ensemble for sampled upper bounds and roof estimates.
  std::size_t remixes = 100;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

inline constexpr std::size_t kChunks = 64;

/// ||x1| - |x2|| <= sigma1 - sigma2 over random 2x2 complex symmetric
/// matrices with unit-disc entries, checked against both the closed-form
/// singular values and the Jacobi route.
CampaignResult lemma1(const Options& opt);

/// |rank2_concurrence_2qubit - wootters_concurrence| <= 1e-8 on random
/// two-qubit rank-2 ensembles.
CampaignResult wootters_equivalence(const Options& opt);

/// Two qubits: |C(Psi1) - C(Psi2)| <= C(rho) <= C(Psi1) + C(Psi2).
/// Larger shapes: |C(Psi1) - C(Psi2)| <= generator bound <= min over
/// `remixes` sampled decompositions of the average pure concurrence.
CampaignResult triangle_concurrence(const BipartiteShape& shape, const Options& opt);

/// l1 triangle for random pairs (pure or mixed) of density matrices.
CampaignResult triangle_l1(const BipartiteShape& shape, const Options& opt);

/// lower <= C_l1(rho) <= roof estimate <= sampled averages on random
/// rank-2 ensembles.
CampaignResult roof_sandwich(const BipartiteShape& shape, const Options& opt);

}  // namespace trineq::campaigns
