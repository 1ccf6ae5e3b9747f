#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weierforge {

enum class ErrorKind {
  PoleHit,
  PoleTooClose,
  QuadratureNotConverged,
  ZeroOnPath,
  InvalidArgument,
  DegreeBudgetExceeded,
  BadDivisor,
  ZeroOnBoundary,
  WindingMismatch,
  RegularityFailure,
  NullityFailure,
  RepresentationOverflow,
  DegenerateTriple,
  ZeroOnArc,
  BlendFailure,
  BracketNotFound,
  WrongSign,
  RefitFailure,
  RankDeficient,
  NewtonDiverged,
  StageFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library surfaces as this exception; `kind()` is the
// machine-readable tag, `what()` carries the diagnostic text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace weierforge
