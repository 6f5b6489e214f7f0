#include "trineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <fmt/core.h>

#include "trineq/error.hpp"
#include "trineq/kernels.hpp"
#include "trineq/tolerances.hpp"

namespace trineq::linalg {

namespace {

// Unitary G = [[c, s], [-s conj(e), c conj(e)]] that diagonalizes the
// Hermitian 2x2 block [[app, g e], [g conj(e), aqq]] with g = |apq|.
struct Rotation {
  double c = 1.0;
  double s = 0.0;
  Complex phase_conj = 1.0;  // conj(e)
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double g = std::abs(apq);
  const double theta = (aqq - app) / (2.0 * g);
  double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  if (theta < 0.0) t = -t;
  Rotation r;
  r.c = 1.0 / std::sqrt(1.0 + t * t);
  r.s = t * r.c;
  r.phase_conj = std::conj(apq / g);
  return r;
}

// M <- M G on columns p, q.
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mkp = m(k, p);
    const Complex mkq = m(k, q);
    m(k, p) = r.c * mkp - r.s * r.phase_conj * mkq;
    m(k, q) = r.s * mkp + r.c * r.phase_conj * mkq;
  }
}

// M <- G^dagger M on rows p, q.
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
  const Complex phase = std::conj(r.phase_conj);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mpk = m(p, k);
    const Complex mqk = m(q, k);
    m(p, k) = r.c * mpk - r.s * phase * mqk;
    m(q, k) = r.s * mpk + r.c * phase * mqk;
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return order;
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() == 0) {
    throw Error(ErrorKind::NotHermitian,
                fmt::format("eigensystem needs a square matrix, got {}x{}", m.rows(), m.cols()));
  }
  if (!m.all_finite()) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
  const double defect = hermitian_defect(m);
  if (defect > tol::kHermitian) {
    throw Error(ErrorKind::NotHermitian, fmt::format("max|m - m^dagger| = {:.3e}", defect));
  }

  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, a.frobenius_norm());
  bool converged = false;
  for (int sweep = 0; sweep <= tol::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) {
      converged = true;
      break;
    }
    if (sweep == tol::kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (apq == Complex{}) continue;
        const Rotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
        rotate_columns(a, p, q, r);
        rotate_rows(a, p, q, r);
        rotate_columns(v, p, q, r);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                fmt::format("off-diagonal norm {:.3e} after {} sweeps", off_diagonal_norm(a),
                            tol::kJacobiMaxSweeps));
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  const auto order = descending_order(diag);

  Eigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const Eigensystem es = hermitian_eigensystem(m);
  const double smallest = es.values.back();
  if (smallest < -tol::kPsdClip) {
    throw Error(ErrorKind::NotPSD, fmt::format("smallest eigenvalue {:.3e}", smallest));
  }
  const std::size_t n = m.rows();
  ComplexMatrix scaled = es.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(es.values[k], 0.0));
    for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= root;
  }
  ComplexMatrix s = scaled * es.vectors.adjoint();
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = s(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (s(i, j) + std::conj(s(j, i)));
      s(i, j) = avg;
      s(j, i) = std::conj(avg);
    }
  }
  return s;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  ComplexMatrix a = m;
  const std::size_t cols = a.cols();
  std::vector<Complex> ci(a.rows()), cj(a.rows());
  auto load = [&](std::size_t c, std::vector<Complex>& dst) {
    for (std::size_t r = 0; r < a.rows(); ++r) dst[r] = a(r, c);
  };

  constexpr double kOrthogonal = 1e-15;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < cols; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) {
        load(i, ci);
        load(j, cj);
        const double alpha = kernels::norm_sq(ci);
        const double beta = kernels::norm_sq(cj);
        if (alpha == 0.0 || beta == 0.0) continue;
        const Complex gamma = kernels::conj_dot(ci, cj);
        if (std::abs(gamma) <= kOrthogonal * std::sqrt(alpha * beta)) continue;
        rotated = true;
        rotate_columns(a, i, j, jacobi_rotation(alpha, beta, gamma));
      }
    }
    if (!rotated) break;
  }

  std::vector<double> out(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    load(c, ci);
    out[c] = std::sqrt(kernels::norm_sq(ci));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Symmetric2Gap symmetric2_svd_gap(const ComplexMatrix& t) {
  if (t.rows() != 2 || t.cols() != 2) {
    throw Error(ErrorKind::NotSymmetric,
                fmt::format("expected a 2x2 matrix, got {}x{}", t.rows(), t.cols()));
  }
  const double asym = std::abs(t(0, 1) - t(1, 0));
  if (asym > tol::kSymmetric2) {
    throw Error(ErrorKind::NotSymmetric, fmt::format("|t01 - t10| = {:.3e}", asym));
  }
  const auto r = kernels::detail::symmetric2_gap_one(t(0, 0), t(1, 1), 0.5 * (t(0, 1) + t(1, 0)));
  if (r.diag_gap > r.sigma1 - r.sigma2 + tol::kInequality) {
    throw Error(ErrorKind::LemmaViolation,
                fmt::format("diagonal gap {:.17g} exceeds sigma1 - sigma2 = {:.17g}", r.diag_gap,
                            r.sigma1 - r.sigma2));
  }
  return {r.diag_gap, {r.sigma1, r.sigma2}};
}

}  // namespace trineq::linalg
