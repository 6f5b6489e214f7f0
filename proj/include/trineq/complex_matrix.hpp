#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace trineq {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sizes here never exceed a few dozen, so
/// every operation is a plain loop over contiguous storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-wise literal, e.g. `{{1, 0}, {0, 1}}`.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }

  std::span<Complex> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij - conj(m_ji)|
double hermitian_defect(const ComplexMatrix& m);

/// max_ij |(m m^dagger - I)_ij|
double unitary_defect(const ComplexMatrix& m);

}  // namespace trineq
