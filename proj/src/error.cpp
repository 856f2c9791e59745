#include "rotors/error.hpp"

namespace rotors {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConvexityViolation: return "ConvexityViolation";
    case ErrorKind::DegenerateShape: return "DegenerateShape";
    case ErrorKind::ForbiddenHarmonic: return "ForbiddenHarmonic";
    case ErrorKind::NotConcurrent: return "NotConcurrent";
    case ErrorKind::DegenerateContacts: return "DegenerateContacts";
    case ErrorKind::ParallelNormals: return "ParallelNormals";
    case ErrorKind::OriginOnLine: return "OriginOnLine";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::DirectionsDependent: return "DirectionsDependent";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::NotARotor: return "NotARotor";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace rotors
