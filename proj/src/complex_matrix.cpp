#include "trineq/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trineq/error.hpp"
#include "trineq/kernels.hpp"

namespace trineq {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::ShapeMismatch, "entry count " + std::to_string(entries_.size()) +
                                              " does not match " + std::to_string(rows_) + "x" +
                                              std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  ComplexMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const { return std::sqrt(kernels::norm_sq(entries_)); }

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "matrix addition");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "matrix subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix product: inner dimensions " +
                                              std::to_string(a.cols()) + " vs " +
                                              std::to_string(b.rows()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      auto brow = b.row(k);
      auto orow = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix-vector product: " + std::to_string(m.cols()) +
                                              " columns vs vector of " +
                                              std::to_string(v.size()));
  }
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc = 0.0;
    auto r = m.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) acc += r[j] * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

double unitary_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m * m.adjoint(), ComplexMatrix::identity(m.rows()));
}

}  // namespace trineq
