#pragma once

#include <stdexcept>

namespace wilsonlab {

// Raised when an argument lies outside an operation's mathematical domain
// (composite where a prime is required, wrong residue class, zero modulus).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Bad user-facing input: unknown identity tag, empty scan range, bad format.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wilsonlab
