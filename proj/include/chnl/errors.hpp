#pragma once

#include <stdexcept>
#include <string>

namespace chnl {

// Invalid user input: bad config values, unknown keys, malformed files.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Admissibility check failed before any time stepping (theta constraint,
// adhesion coupling constraint, kernel wrap, dt stability bound).
struct PreflightError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime numerical failure: non-finite update, quadrature non-convergence,
// memory guard exceeded.
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chnl
