#pragma once

#include <vector>

#include "trineq/complex_matrix.hpp"

namespace trineq::linalg {

struct Eigensystem {
  /// Descending; ties keep the original diagonal order.
  std::vector<double> values;
  /// Column k is the eigenvector for values[k].
  ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws NotHermitian if max|m - m^dagger| > 1e-9, NoConvergence after 100 sweeps.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-9, 0) are
/// clipped to zero; anything more negative raises NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Singular values of any matrix (one per column), descending. Computed by
/// one-sided Jacobi so small values keep absolute accuracy near machine
/// epsilon instead of the square root of it.
std::vector<double> singular_values(const ComplexMatrix& m);

struct SingularPair2 {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
};

struct Symmetric2Gap {
  /// | |t00| - |t11| |
  double abs_diag_gap = 0.0;
  SingularPair2 pair;
};

/// Closed-form singular values of a 2x2 complex symmetric matrix together
/// with the gap between the moduli of its diagonal entries. The result always
/// satisfies abs_diag_gap <= sigma1 - sigma2 (+1e-9); a violation throws
/// LemmaViolation since it can only come from a numerical defect.
Symmetric2Gap symmetric2_svd_gap(const ComplexMatrix& t);

}  // namespace trineq::linalg
