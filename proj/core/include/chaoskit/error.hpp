#pragma once

#include <stdexcept>
#include <string>

namespace chaoskit {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad arguments, broken invariants, rejected files.
/// The CLI maps this family to exit code 2.
class validation_error : public error {
 public:
  using error::error;
};

/// Coefficient lies on one of the excluded values alpha in {1, 2, 2/3}.
class excluded_alpha_error : public validation_error {
 public:
  using validation_error::validation_error;
};

/// A numerical procedure could not meet its contract (quadrature did not
/// converge, an enumeration guard tripped, a simulation blew up).
/// The CLI maps this family to exit code 1.
class numeric_error : public error {
 public:
  using error::error;
};

class guard_exceeded_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

}  // namespace chaoskit
