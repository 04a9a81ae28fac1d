#include "peakon/error.hpp"

namespace peakon {

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::numerics: return "NumericsError";
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::not_an_eigenvalue: return "NotAnEigenvalue";
    case ErrorKind::eigenvalue_hit: return "EigenvalueHit";
    case ErrorKind::disjointness_violated: return "DisjointnessViolated";
    case ErrorKind::speed_collision: return "SpeedCollision";
    case ErrorKind::not_representable: return "NotRepresentable";
    case ErrorKind::boundary_mass: return "BoundaryMass";
    case ErrorKind::indefinite_not_supported: return "IndefiniteNotSupported";
    case ErrorKind::not_realizable: return "NotRealizable";
  }
  return "Error";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::invalid_argument:
      return 2;
    case ErrorKind::indefinite_not_supported:
      return 4;
    case ErrorKind::not_realizable:
      return 5;
    default:
      return 3;
  }
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace peakon
