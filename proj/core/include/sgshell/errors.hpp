#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgshell {

enum class ErrorKind {
  DegenerateChart,
  OutOfDomain,
  DomainMismatch,
  ShellSpaceViolation,
  ThicknessCollapse,
  OrientationLoss,
  InsufficientSmoothness,
  MissingModuli,
  SymmetryViolation,
  NonOrthogonalRate,
  CornerUndeclared,
  BracketFailure,
  RegimeViolation,
  ConfigError,
  TaskError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateChart: return "DegenerateChart";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ShellSpaceViolation: return "ShellSpaceViolation";
    case ErrorKind::ThicknessCollapse: return "ThicknessCollapse";
    case ErrorKind::OrientationLoss: return "OrientationLoss";
    case ErrorKind::InsufficientSmoothness: return "InsufficientSmoothness";
    case ErrorKind::MissingModuli: return "MissingModuli";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::NonOrthogonalRate: return "NonOrthogonalRate";
    case ErrorKind::CornerUndeclared: return "CornerUndeclared";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::RegimeViolation: return "RegimeViolation";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::TaskError: return "TaskError";
  }
  return "Unknown";
}

}  // namespace sgshell
