#pragma once

#include <stdexcept>
#include <string>

namespace curvlab {

// Bad run configuration / malformed input files. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pipeline stage was invoked before the stage it consumes. CLI exit code 3.
struct UpstreamMissingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure (non-convergence, divergence, undefined metric). Exit 4.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace curvlab
