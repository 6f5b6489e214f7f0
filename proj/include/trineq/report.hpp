#pragma once

#include <optional>
#include <string>

#include "trineq/tolerances.hpp"

namespace trineq {

/// One evaluation of a chain lower <= middle <= upper.
struct InequalityReport {
  double lower = 0.0;
  double middle = 0.0;
  std::optional<double> upper;
  double lower_margin = 0.0;  // middle - lower
  double upper_margin = 0.0;  // upper - middle, 0 when upper is absent
  bool pass = false;
  std::string context;

  static InequalityReport make(double lower, double middle, std::optional<double> upper,
                               std::string context) {
    InequalityReport r;
    r.lower = lower;
    r.middle = middle;
    r.upper = upper;
    r.lower_margin = middle - lower;
    r.upper_margin = upper ? *upper - middle : 0.0;
    r.pass = r.lower_margin >= -tol::kInequality && r.upper_margin >= -tol::kInequality;
    r.context = std::move(context);
    return r;
  }
};

}  // namespace trineq
