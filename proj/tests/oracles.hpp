#pragma once

// Reference computations written directly from the definitions, sharing no
// code with the library beyond the matrix container.

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "trineq/complex_matrix.hpp"

namespace oracle {

using trineq::Complex;
using trineq::ComplexMatrix;

inline double l1(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += std::abs(m(i, j));
  return s;
}

inline ComplexMatrix projector(const std::vector<Complex>& v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

inline ComplexMatrix mixture(double p1, const std::vector<Complex>& a, const std::vector<Complex>& b) {
  ComplexMatrix m = projector(a);
  ComplexMatrix n = projector(b);
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = p1 * m(i, j) + (1.0 - p1) * n(i, j);
  return out;
}

inline ComplexMatrix reduce_a(const std::vector<Complex>& v, std::size_t d1, std::size_t d2) {
  ComplexMatrix r(d1, d1);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t k = 0; k < d1; ++k)
      for (std::size_t j = 0; j < d2; ++j) r(i, k) += v[i * d2 + j] * std::conj(v[k * d2 + j]);
  return r;
}

/// Two-qubit pure concurrence 2 |a d - b c|.
inline double pure_c2(const std::vector<Complex>& v) {
  return 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
}

/// Pure concurrence from the full minor sum, any shape.
inline double pure_c_minors(const std::vector<Complex>& v, std::size_t d1, std::size_t d2) {
  double s = 0.0;
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = i + 1; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k)
        for (std::size_t l = k + 1; l < d2; ++l) {
          const Complex m = v[i * d2 + k] * v[j * d2 + l] - v[i * d2 + l] * v[j * d2 + k];
          s += std::norm(m);
        }
  return 2.0 * std::sqrt(s);
}

/// Concurrence of a two-qubit X state (nonzero entries only on the diagonal
/// and anti-diagonal).
inline double x_state_concurrence(const ComplexMatrix& r) {
  const double a = std::abs(r(0, 3)) - std::sqrt(r(1, 1).real() * r(2, 2).real());
  const double b = std::abs(r(1, 2)) - std::sqrt(r(0, 0).real() * r(3, 3).real());
  return 2.0 * std::max({0.0, a, b});
}

/// Singular values of a 2x2 matrix from the eigenvalues of M^dagger M by
/// the quadratic formula.
inline std::pair<double, double> singular2(const ComplexMatrix& m) {
  const double a = std::norm(m(0, 0)) + std::norm(m(1, 0));
  const double c = std::norm(m(0, 1)) + std::norm(m(1, 1));
  const Complex b = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
  const double mean = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
  return {std::sqrt(mean + rad), std::sqrt(std::max(0.0, mean - rad))};
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace oracle
