#pragma once

#include <stdexcept>
#include <string>

namespace peakon {

enum class ErrorKind {
  invalid_argument,
  parse,
  numerics,
  overflow,
  not_an_eigenvalue,
  eigenvalue_hit,
  disjointness_violated,
  speed_collision,
  not_representable,
  boundary_mass,
  indefinite_not_supported,
  not_realizable,
};

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

/// Process exit code used by the command-line tool for a given failure.
/// 2 parse, 3 numerics (and every other computational failure),
/// 4 indefinite data, 5 unrealizable data.
int exit_code(ErrorKind kind) noexcept;

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace peakon
