#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trineq {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  NotPSD,
  NotSymmetric,
  LemmaViolation,
  ShapeMismatch,
  WrongShape,
  InvalidState,
  FormulaMismatch,
  IndexOutOfRange,
  DegenerateDecomposition,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trineq
