#pragma once

#include <stdexcept>
#include <string>

namespace stanley {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two monomials (or a monomial and an ideal) live in rings with different
/// variable counts.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed instance, monomial or config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Data violates a type invariant (e.g. a generator of J outside I).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A precondition that depends on several inputs together does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The problem exceeds a configured size bound; the operation refuses.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Campaign configuration is inconsistent or infeasible.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace stanley
