#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcaa {

enum class ErrorKind {
  InvalidInput,
  NotNilpotent,
  InvalidSpec,
  NotHypercomplex,
  InconsistentDecomposition,
  InvalidMetric,
  NotHermitian,
  NotHyperhermitian,
  UnsupportedSpectrum,
  LiftRequiresFlatTorsionFree,
  DeskScaleExceeded,
  CensusFailure,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotHypercomplex: return "NotHypercomplex";
    case ErrorKind::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrorKind::InvalidMetric: return "InvalidMetric";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotHyperhermitian: return "NotHyperhermitian";
    case ErrorKind::UnsupportedSpectrum: return "UnsupportedSpectrum";
    case ErrorKind::LiftRequiresFlatTorsionFree: return "LiftRequiresFlatTorsionFree";
    case ErrorKind::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorKind::CensusFailure: return "CensusFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace hcaa
