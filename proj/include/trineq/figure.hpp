#pragma once

// Data behind the two sweep figures of the rank-2 two-qubit example: for each
// P the concurrence C(rho) and, for every sampled decomposition, the sum and
// difference of the weighted pure concurrences.

#include <cstdint>
#include <string>
#include <vector>

#include "trineq/decompositions.hpp"

namespace trineq::figure {

struct Config {
  std::size_t grid_points = 101;
  std::size_t decomps_per_p = 200;
  std::uint64_t seed = 1;
  double p_lo = 0.01;
  double p_hi = 0.99;
};

struct SummaryRow {
  double p = 0.0;
  double c_rho = 0.0;
  double min_sum = 0.0;
  double max_sum = 0.0;
  double min_diff = 0.0;
  double max_diff = 0.0;
  double coa_estimate = 0.0;  // max of sums
};

struct FigureData {
  Config config;
  std::vector<decompositions::SweepPoint> sweep;
  /// Analytic P = 0 row, one row per grid point, analytic P = 1 row.
  std::vector<SummaryRow> summary;
  std::size_t points = 0;
  std::size_t sum_violations = 0;   // sum_C < C_rho - 1e-9
  std::size_t diff_violations = 0;  // diff_C > C_rho + 1e-9
};

FigureData build(const Config& config);

/// P,C_rho,sample_id,theta,gamma,phi,sum_C,diff_C,violates_upper,violates_lower
std::string samples_csv(const FigureData& data);
/// P,C_rho,min_sum_C,max_sum_C,min_diff_C,max_diff_C,coa_estimate
std::string summary_csv(const FigureData& data);
/// Both tables in one document; `figure` is 1 or 2.
std::string to_json(const FigureData& data, int figure);

}  // namespace trineq::figure
