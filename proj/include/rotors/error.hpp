#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotors {

enum class ErrorKind {
  ConvexityViolation,
  DegenerateShape,
  ForbiddenHarmonic,
  NotConcurrent,
  DegenerateContacts,
  ParallelNormals,
  OriginOnLine,
  ZeroDirection,
  DirectionsDependent,
  NotUnit,
  NotARotor,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Geometric precondition failure. The kind is part of the public contract;
/// the message carries the numbers that triggered it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rotors
