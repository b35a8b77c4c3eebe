#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace confequiv {

enum class ErrorKind {
  InvalidGroupSpec,
  UnsupportedOnInfinite,
  BadRepresentativePair,
  ScopeViolation,
  ShapeMismatch,
  NotEpimorphism,
  NotNormal,
  NotGenerating,
  UnsupportedKind,
  UnsupportedDescription,
  UnsupportedOnQuotient,
  TooLarge,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can dispatch without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace confequiv
