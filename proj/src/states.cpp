#include "trineq/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "trineq/error.hpp"
#include "trineq/kernels.hpp"
#include "trineq/linalg.hpp"

namespace trineq {

BipartiteShape BipartiteShape::make(std::size_t d1, std::size_t d2, std::size_t cap) {
  if (d1 < 2 || d2 < 2) {
    throw Error(ErrorKind::InvalidState,
                fmt::format("local dimensions must be >= 2, got {}x{}", d1, d2));
  }
  if (d1 * d2 > cap) {
    throw Error(ErrorKind::InvalidState,
                fmt::format("total dimension {} exceeds the cap of {}", d1 * d2, cap));
  }
  return {d1, d2};
}

BipartiteShape BipartiteShape::single(std::size_t d, std::size_t cap) {
  if (d < 2 || d > cap) {
    throw Error(ErrorKind::InvalidState,
                fmt::format("single-system dimension must be in [2, {}], got {}", cap, d));
  }
  return {d, 1};
}

std::string to_string(const BipartiteShape& s) {
  return s.d2 == 1 ? fmt::format("{}", s.d1) : fmt::format("{}x{}", s.d1, s.d2);
}

PureState::PureState(BipartiteShape shape, std::vector<Complex> amplitudes, double weight)
    : shape_(shape), amplitudes_(std::move(amplitudes)), weight_(weight) {
  if (amplitudes_.size() != shape_.dim()) {
    throw Error(ErrorKind::ShapeMismatch,
                fmt::format("{} amplitudes for shape {} (expected {})", amplitudes_.size(),
                            to_string(shape_), shape_.dim()));
  }
  for (Complex z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::InvalidState, "non-finite amplitude");
    }
  }
  const double norm = kernels::norm_sq(amplitudes_);
  if (std::abs(norm - 1.0) > tol::kNormalization) {
    throw Error(ErrorKind::InvalidState, fmt::format("squared norm {:.17g} is not 1", norm));
  }
  if (!(weight_ > 0.0 && weight_ <= 1.0)) {
    throw Error(ErrorKind::InvalidState, fmt::format("weight {} outside (0, 1]", weight_));
  }
}

PureState PureState::normalized(BipartiteShape shape, std::vector<Complex> amplitudes,
                                double weight) {
  const double norm = std::sqrt(kernels::norm_sq(amplitudes));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::InvalidState, "cannot normalize a zero or non-finite vector");
  }
  for (auto& z : amplitudes) z /= norm;
  return {shape, std::move(amplitudes), weight};
}

PureState PureState::basis(BipartiteShape shape, std::size_t i, std::size_t j) {
  if (i >= shape.d1 || j >= shape.d2) {
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("basis state |{}{}> outside shape {}", i, j, to_string(shape)));
  }
  std::vector<Complex> amps(shape.dim());
  amps[shape.index(i, j)] = 1.0;
  return {shape, std::move(amps)};
}

std::vector<Complex> PureState::subnormalized() const {
  std::vector<Complex> out = amplitudes_;
  const double scale = std::sqrt(weight_);
  for (auto& z : out) z *= scale;
  return out;
}

ComplexMatrix PureState::projector() const {
  return ComplexMatrix::outer(amplitudes_, amplitudes_);
}

DensityMatrix DensityMatrix::from_matrix(BipartiteShape shape, ComplexMatrix m) {
  if (m.rows() != shape.dim() || m.cols() != shape.dim()) {
    throw Error(ErrorKind::ShapeMismatch,
                fmt::format("{}x{} matrix for shape {}", m.rows(), m.cols(), to_string(shape)));
  }
  if (!m.all_finite()) throw Error(ErrorKind::InvalidState, "density matrix has non-finite entries");
  const double defect = hermitian_defect(m);
  if (defect > tol::kHermitian) {
    throw Error(ErrorKind::InvalidState, fmt::format("not Hermitian (defect {:.3e})", defect));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw Error(ErrorKind::InvalidState,
                fmt::format("trace {:.17g}{:+.3e}i is not 1", tr.real(), tr.imag()));
  }
  const auto es = linalg::hermitian_eigensystem(m);
  if (es.values.back() < -tol::kPsdClip) {
    throw Error(ErrorKind::InvalidState,
                fmt::format("smallest eigenvalue {:.3e} is negative", es.values.back()));
  }
  return {shape, std::move(m)};
}

DensityMatrix DensityMatrix::pure(const PureState& psi) { return {psi.shape(), psi.projector()}; }

DensityMatrix DensityMatrix::in_basis(const ComplexMatrix& unitary) const {
  if (unitary.rows() != shape_.dim() || unitary.cols() != shape_.dim()) {
    throw Error(ErrorKind::ShapeMismatch,
                fmt::format("{}x{} basis change for shape {}", unitary.rows(), unitary.cols(),
                            to_string(shape_)));
  }
  const double defect = unitary_defect(unitary);
  if (defect > tol::kUnitary) {
    throw Error(ErrorKind::InvalidState, fmt::format("basis change is not unitary ({:.3e})", defect));
  }
  return {shape_, unitary.adjoint() * matrix_ * unitary};
}

Rank2Ensemble::Rank2Ensemble(double p1, double p2, PureState psi1, PureState psi2)
    : p1_(p1), p2_(p2), psi1_(std::move(psi1)), psi2_(std::move(psi2)) {
  if (!(psi1_.shape() == psi2_.shape())) {
    throw Error(ErrorKind::ShapeMismatch,
                fmt::format("ensemble components have shapes {} and {}",
                            to_string(psi1_.shape()), to_string(psi2_.shape())));
  }
  const auto report = validate_ensemble(p1_, p2_, psi1_, psi2_);
  if (!report.pass) {
    std::string failed;
    for (const auto& c : report.checks) {
      if (!c.pass) failed += fmt::format("{}{} (measured {:.3e})", failed.empty() ? "" : ", ",
                                         c.name, c.measured);
    }
    throw Error(ErrorKind::InvalidState, "rank-2 ensemble invariants failed: " + failed);
  }
}

ValidationReport validate_ensemble(double p1, double p2, const PureState& psi1,
                                   const PureState& psi2) {
  ValidationReport r;
  auto add = [&](std::string name, double measured, double limit, bool pass) {
    r.checks.push_back({std::move(name), measured, limit, pass});
  };
  auto outside_open_unit = [](double p) {
    if (!std::isfinite(p)) return std::numeric_limits<double>::infinity();
    return p <= 0.0 ? -p : (p >= 1.0 ? p - 1.0 : 0.0);
  };
  add("p1_in_open_unit_interval", outside_open_unit(p1), 0.0, p1 > 0.0 && p1 < 1.0);
  add("p2_in_open_unit_interval", outside_open_unit(p2), 0.0, p2 > 0.0 && p2 < 1.0);
  const double sum_dev = std::abs(p1 + p2 - 1.0);
  add("weights_sum_to_one", sum_dev, tol::kWeightSum, sum_dev <= tol::kWeightSum);

  const bool same_shape = psi1.shape() == psi2.shape();
  add("same_shape", same_shape ? 0.0 : 1.0, 0.0, same_shape);
  for (int a = 0; a < 2; ++a) {
    const PureState& psi = a == 0 ? psi1 : psi2;
    const double dev = std::abs(kernels::norm_sq(psi.amplitudes()) - 1.0);
    add(fmt::format("psi{}_normalized", a + 1), dev, tol::kNormalization,
        dev <= tol::kNormalization);
  }
  if (same_shape) {
    const double gram = 1.0 - std::norm(overlap(psi1, psi2));
    add("linear_independence", gram, tol::kLinearIndependence, gram > tol::kLinearIndependence);
  } else {
    add("linear_independence", 0.0, tol::kLinearIndependence, false);
  }
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.pass; });
  return r;
}

DensityMatrix density_from_ensemble(const Rank2Ensemble& e) {
  ComplexMatrix m = e.psi1().projector() * Complex(e.p1());
  m += e.psi2().projector() * Complex(e.p2());
  return {e.shape(), std::move(m)};
}

DensityMatrix mix(double p1, const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (!(rho1.shape() == rho2.shape())) {
    throw Error(ErrorKind::ShapeMismatch, fmt::format("mixing shapes {} and {}",
                                                      to_string(rho1.shape()),
                                                      to_string(rho2.shape())));
  }
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw Error(ErrorKind::InvalidState, fmt::format("mixing weight {} outside [0, 1]", p1));
  }
  return {rho1.shape(), rho1.matrix() * Complex(p1) + rho2.matrix() * Complex(1.0 - p1)};
}

ComplexMatrix partial_trace_A(const DensityMatrix& rho) {
  const auto& s = rho.shape();
  const auto& m = rho.matrix();
  ComplexMatrix out(s.d1, s.d1);
  for (std::size_t i = 0; i < s.d1; ++i)
    for (std::size_t k = 0; k < s.d1; ++k) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < s.d2; ++j) acc += m(s.index(i, j), s.index(k, j));
      out(i, k) = acc;
    }
  return out;
}

ComplexMatrix partial_trace_A(const PureState& psi) {
  // (rho_A)_{ik} = sum_j phi_ij conj(phi_kj): rows of the coefficient matrix.
  const auto& s = psi.shape();
  const auto amps = psi.amplitudes();
  ComplexMatrix out(s.d1, s.d1);
  for (std::size_t i = 0; i < s.d1; ++i)
    for (std::size_t k = i; k < s.d1; ++k) {
      const Complex v = kernels::conj_dot(amps.subspan(k * s.d2, s.d2), amps.subspan(i * s.d2, s.d2));
      out(i, k) = v;
      out(k, i) = std::conj(v);
    }
  return out;
}

const ComplexMatrix& sigma_yy() {
  static const ComplexMatrix yy = [] {
    const ComplexMatrix sy{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
    return kron(sy, sy);
  }();
  return yy;
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  if (!rho.shape().is_two_qubit()) {
    throw Error(ErrorKind::WrongShape,
                "spin flip is defined for 2x2 states, got " + to_string(rho.shape()));
  }
  return sigma_yy() * rho.matrix().conj() * sigma_yy();
}

Complex overlap(const PureState& a, const PureState& b) {
  if (!(a.shape() == b.shape())) {
    throw Error(ErrorKind::ShapeMismatch, fmt::format("overlap of shapes {} and {}",
                                                      to_string(a.shape()), to_string(b.shape())));
  }
  return kernels::conj_dot(a.amplitudes(), b.amplitudes());
}

}  // namespace trineq
