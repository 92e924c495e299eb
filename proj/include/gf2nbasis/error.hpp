#pragma once

#include <stdexcept>
#include <string>

namespace gf2nbasis {

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when parameters are well-formed but the mathematical object does
/// not exist (composite r, coset partition failure, odd d for Kummer, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always an arithmetic bug.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed serialized input (hex strings, CSV files).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace gf2nbasis
