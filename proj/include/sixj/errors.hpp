#pragma once

#include <stdexcept>
#include <string>

namespace sixj {

/// Malformed text input (spins, numeric flags).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the domain of an operation: negative spins, inadmissible
/// triads, wrong tetrahedron kind for the requested quantity.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Zero-volume (flat) tetrahedron or a triad with a vanishing side where the
/// asymptotic formulas divide by zero or take a logarithm of zero.
class DegenerateError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Negative squared volume; the oscillatory formula does not apply and the
/// caller should use decay_rate instead.
class MinkowskianError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A runtime-asserted identity did not hold. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sixj
