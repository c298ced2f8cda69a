#pragma once

#include <stdexcept>
#include <string>

namespace sdw {

// Bad user-supplied parameters (unsupported order, malformed rational, ...).
class InvalidParameters : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A quantity is undefined at the requested point: a vanishing denominator,
// Re(mu) <= 0, or a characteristic where the frame degenerates.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class IdentificationFailed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Orbit with a nonzero point where the frame itself degenerates.
class ExceptionalOrbit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace sdw
