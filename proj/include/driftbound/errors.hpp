#pragma once

#include <stdexcept>

namespace driftbound {

// An input lies outside the mathematical domain of the requested quantity.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative solver exhausted its iteration budget without meeting its
// tolerance. With the bracketed, monotone problems solved here this signals
// a bug or a pathological input rather than an expected failure mode.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace driftbound
