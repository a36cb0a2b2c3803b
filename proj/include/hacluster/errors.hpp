#pragma once

#include <stdexcept>
#include <string>

namespace hacluster {

/// Model parameters or user input violate a documented invariant.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A linear system was singular (reducible chain) or a solve failed.
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Quadrature could not absorb enough of the distribution tail.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace hacluster
