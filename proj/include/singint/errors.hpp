#ifndef SINGINT_ERRORS_HPP
#define SINGINT_ERRORS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace singint {

// Bad scalar/vector arguments (exponents out of range, eps >= R, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Grid/dimension mismatches between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A characteristic failed conditions (1)-(3).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symbol vanishes (or nearly vanishes) on the frequency lattice; carries the
// obstruction frequency found by the ellipticity scan.
struct EllipticityError : std::runtime_error {
  EllipticityError(const std::string& msg, std::array<int, 3> obstruction)
      : std::runtime_error(msg), obstruction(obstruction) {}
  std::array<int, 3> obstruction{};
};

// An iteration failed to reach its residual target; carries the residual
// history for post-mortem.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, std::vector<double> history)
      : std::runtime_error(msg), history(std::move(history)) {}
  std::vector<double> history;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace singint

#endif
