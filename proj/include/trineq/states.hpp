#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trineq/complex_matrix.hpp"
#include "trineq/tolerances.hpp"

namespace trineq {

/// Local dimensions of H_A (x) H_B. Basis states |ij> are stored row-major,
/// index i * d2 + j, with i labelling subsystem A.
struct BipartiteShape {
  std::size_t d1 = 2;
  std::size_t d2 = 2;

  /// Throws InvalidState unless d1, d2 >= 2 and d1 * d2 <= cap.
  static BipartiteShape make(std::size_t d1, std::size_t d2,
                             std::size_t cap = tol::kDefaultDimensionCap);
  /// A single d-level system (d2 = 1), for coherence-only work. Such states
  /// carry no entanglement: they have no generator pairs.
  static BipartiteShape single(std::size_t d, std::size_t cap = tol::kDefaultDimensionCap);

  std::size_t dim() const noexcept { return d1 * d2; }
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * d2 + j; }
  bool is_two_qubit() const noexcept { return d1 == 2 && d2 == 2; }
  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

std::string to_string(const BipartiteShape& s);

/// Normalized amplitude vector with a separate weight p in (0, 1]; the
/// subnormalized vector sqrt(p)|psi> is materialized only on request.
class PureState {
 public:
  /// Requires sum |amp|^2 = 1 within 1e-10 and weight in (0, 1].
  PureState(BipartiteShape shape, std::vector<Complex> amplitudes, double weight = 1.0);

  /// Rescales `amplitudes` to unit norm first.
  static PureState normalized(BipartiteShape shape, std::vector<Complex> amplitudes,
                              double weight = 1.0);
  /// Computational basis state |ij>.
  static PureState basis(BipartiteShape shape, std::size_t i, std::size_t j);

  const BipartiteShape& shape() const noexcept { return shape_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::size_t i, std::size_t j) const noexcept {
    return amplitudes_[shape_.index(i, j)];
  }
  double weight() const noexcept { return weight_; }

  PureState with_weight(double weight) const { return {shape_, amplitudes_, weight}; }
  /// sqrt(weight) * amplitudes
  std::vector<Complex> subnormalized() const;
  /// |psi><psi| of the normalized vector.
  ComplexMatrix projector() const;

 private:
  BipartiteShape shape_;
  std::vector<Complex> amplitudes_;
  double weight_;
};

class DensityMatrix;
class Rank2Ensemble;
/// p1 |psi1><psi1| + p2 |psi2><psi2|
DensityMatrix density_from_ensemble(const Rank2Ensemble& e);
DensityMatrix mix(double p1, const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Hermitian, unit-trace, PSD matrix over a bipartite shape.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-9), trace (1e-9) and spectrum (>= -1e-9).
  static DensityMatrix from_matrix(BipartiteShape shape, ComplexMatrix m);
  static DensityMatrix pure(const PureState& psi);

  const BipartiteShape& shape() const noexcept { return shape_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// U^dagger rho U: the same state expressed in the basis formed by the
  /// columns of the unitary U.
  DensityMatrix in_basis(const ComplexMatrix& unitary) const;

 private:
  friend DensityMatrix density_from_ensemble(const Rank2Ensemble& e);
  friend DensityMatrix mix(double p1, const DensityMatrix& rho1, const DensityMatrix& rho2);
  DensityMatrix(BipartiteShape shape, ComplexMatrix m)
      : shape_(shape), matrix_(std::move(m)) {}

  BipartiteShape shape_;
  ComplexMatrix matrix_;
};

/// rho = p1 |psi1><psi1| + p2 |psi2><psi2| with linearly independent components.
class Rank2Ensemble {
 public:
  /// Throws InvalidState if the weights are outside (0, 1) or do not sum to 1
  /// within 1e-12, if the shapes differ (ShapeMismatch), or if
  /// 1 - |<psi1|psi2>|^2 <= 1e-10.
  Rank2Ensemble(double p1, double p2, PureState psi1, PureState psi2);
  static Rank2Ensemble make(double p1, PureState psi1, PureState psi2) {
    return {p1, 1.0 - p1, std::move(psi1), std::move(psi2)};
  }

  double p1() const noexcept { return p1_; }
  double p2() const noexcept { return p2_; }
  double p(int a) const noexcept { return a == 0 ? p1_ : p2_; }
  const PureState& psi1() const noexcept { return psi1_; }
  const PureState& psi2() const noexcept { return psi2_; }
  const PureState& psi(int a) const noexcept { return a == 0 ? psi1_ : psi2_; }
  const BipartiteShape& shape() const noexcept { return psi1_.shape(); }

  /// |Psi_a> = sqrt(p_a) |psi_a>, as a state carrying weight p_a.
  PureState weighted(int a) const { return psi(a).with_weight(p(a)); }

 private:
  double p1_, p2_;
  PureState psi1_, psi2_;
};

struct InvariantCheck {
  std::string name;
  /// The measured quantity: a deviation from the ideal value, except for the
  /// linear-independence check where it is the Gram determinant itself.
  double measured = 0.0;
  double limit = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<InvariantCheck> checks;
  bool pass = false;
};

/// Checks every Rank2Ensemble invariant on raw inputs without throwing.
ValidationReport validate_ensemble(double p1, double p2, const PureState& psi1,
                                   const PureState& psi2);

/// p1 rho1 + (1 - p1) rho2; p1 must lie in [0, 1] and the shapes must agree.
DensityMatrix mix(double p1, const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Tr_B rho, a d1 x d1 matrix.
ComplexMatrix partial_trace_A(const DensityMatrix& rho);
ComplexMatrix partial_trace_A(const PureState& psi);

/// sigma_y (x) sigma_y
const ComplexMatrix& sigma_yy();

/// (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y); 2x2 shapes only.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// <a|b> of the normalized vectors; weights are ignored.
Complex overlap(const PureState& a, const PureState& b);

}  // namespace trineq
