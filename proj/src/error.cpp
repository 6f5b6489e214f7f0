#include "trineq/error.hpp"

namespace trineq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegenerateDecomposition: return "DegenerateDecomposition";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace trineq
