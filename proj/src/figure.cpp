#include "trineq/figure.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include <fmt/core.h>
#include <json.hpp>

#include "trineq/concurrence.hpp"
#include "trineq/tolerances.hpp"

namespace trineq::figure {

namespace {

bool violates_upper(double sum, double c_rho) { return sum < c_rho - tol::kInequality; }
bool violates_lower(double diff, double c_rho) { return diff > c_rho + tol::kInequality; }

// The endpoints are the pure states themselves; every 2x2 re-mixing of a pure
// state splits it as cos^2 / sin^2, so sums equal C(psi) and differences
// range over [0, C(psi)].
SummaryRow endpoint(double p, const PureState& psi) {
  const double c = concurrence::pure_concurrence(psi);
  return {p, c, c, c, 0.0, c, c};
}

}  // namespace

FigureData build(const Config& config) {
  FigureData data;
  data.config = config;
  const auto grid = decompositions::linear_grid(config.p_lo, config.p_hi, config.grid_points);
  data.sweep = decompositions::sweep_example(grid, config.decomps_per_p, config.seed);

  data.summary.push_back(endpoint(0.0, decompositions::example_psi2()));
  for (const auto& pt : data.sweep) {
    SummaryRow row{pt.p, pt.c_rho, std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity(), 0.0};
    for (const auto& s : pt.samples) {
      row.min_sum = std::min(row.min_sum, s.avg_pure_concurrence);
      row.max_sum = std::max(row.max_sum, s.avg_pure_concurrence);
      row.min_diff = std::min(row.min_diff, s.diff_concurrence);
      row.max_diff = std::max(row.max_diff, s.diff_concurrence);
      data.sum_violations += violates_upper(s.avg_pure_concurrence, pt.c_rho);
      data.diff_violations += violates_lower(s.diff_concurrence, pt.c_rho);
      ++data.points;
    }
    row.coa_estimate = row.max_sum;
    data.summary.push_back(row);
  }
  data.summary.push_back(endpoint(1.0, decompositions::example_psi1()));
  return data;
}

std::string samples_csv(const FigureData& data) {
  std::string out = "P,C_rho,sample_id,theta,gamma,phi,sum_C,diff_C,violates_upper,violates_lower\n";
  auto it = std::back_inserter(out);
  for (const auto& pt : data.sweep) {
    for (std::size_t k = 0; k < pt.samples.size(); ++k) {
      const auto& s = pt.samples[k];
      fmt::format_to(it, "{:.17g},{:.17g},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{}\n", pt.p,
                     pt.c_rho, k, s.unitary.theta, s.unitary.gamma, s.unitary.phi,
                     s.avg_pure_concurrence, s.diff_concurrence,
                     violates_upper(s.avg_pure_concurrence, pt.c_rho),
                     violates_lower(s.diff_concurrence, pt.c_rho));
    }
  }
  return out;
}

std::string summary_csv(const FigureData& data) {
  std::string out = "P,C_rho,min_sum_C,max_sum_C,min_diff_C,max_diff_C,coa_estimate\n";
  auto it = std::back_inserter(out);
  for (const auto& r : data.summary) {
    fmt::format_to(it, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.p, r.c_rho,
                   r.min_sum, r.max_sum, r.min_diff, r.max_diff, r.coa_estimate);
  }
  return out;
}

std::string to_json(const FigureData& data, int figure) {
  using nlohmann::json;
  json samples = json::array();
  for (const auto& pt : data.sweep) {
    for (std::size_t k = 0; k < pt.samples.size(); ++k) {
      const auto& s = pt.samples[k];
      samples.push_back({{"P", pt.p},
                         {"C_rho", pt.c_rho},
                         {"sample_id", k},
                         {"theta", s.unitary.theta},
                         {"gamma", s.unitary.gamma},
                         {"phi", s.unitary.phi},
                         {"sum_C", s.avg_pure_concurrence},
                         {"diff_C", s.diff_concurrence},
                         {"violates_upper", violates_upper(s.avg_pure_concurrence, pt.c_rho)},
                         {"violates_lower", violates_lower(s.diff_concurrence, pt.c_rho)}});
    }
  }
  json summary = json::array();
  for (const auto& r : data.summary) {
    summary.push_back({{"P", r.p},
                       {"C_rho", r.c_rho},
                       {"min_sum_C", r.min_sum},
                       {"max_sum_C", r.max_sum},
                       {"min_diff_C", r.min_diff},
                       {"max_diff_C", r.max_diff},
                       {"coa_estimate", r.coa_estimate}});
  }
  json doc = {{"figure", figure},
              {"grid_points", data.config.grid_points},
              {"decompositions_per_P", data.config.decomps_per_p},
              {"seed", data.config.seed},
              {"points", data.points},
              {"sum_violations", data.sum_violations},
              {"diff_violations", data.diff_violations},
              {"samples", std::move(samples)},
              {"summary", std::move(summary)}};
  return doc.dump(1) + "\n";
}

}  // namespace trineq::figure
