#pragma once

// Single table of numerical thresholds shared by every module.

namespace trineq::tol {

// Hermiticity precondition of the eigensolver and of density matrices.
inline constexpr double kHermitian = 1e-9;
// Eigenvalues in [-kPsdClip, 0) are treated as 0.
inline constexpr double kPsdClip = 1e-9;
inline constexpr double kTrace = 1e-9;
// Jacobi stops once the off-diagonal Frobenius norm falls below this
// (scaled by max(1, ||m||_F)).
inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

inline constexpr double kSymmetric2 = 1e-12;
inline constexpr double kTauSymmetric = 1e-10;

inline constexpr double kNormalization = 1e-10;
inline constexpr double kWeightSum = 1e-12;
inline constexpr double kLinearIndependence = 1e-10;

// Slack allowed on any inequality check.
inline constexpr double kInequality = 1e-9;
// Agreement between two routes to the same quantity.
inline constexpr double kEquality = 1e-8;
inline constexpr double kPureFormulaAgreement = 1e-8;

inline constexpr double kDegenerateWeight = 1e-10;
inline constexpr int kDegenerateRetries = 100;

inline constexpr double kUnitary = 1e-9;

inline constexpr int kDefaultDimensionCap = 64;

}  // namespace trineq::tol
