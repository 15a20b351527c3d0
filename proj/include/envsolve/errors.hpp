#pragma once

#include <stdexcept>
#include <string>

namespace envsolve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain (n < 2, odd n with p < 0,
/// Minus branch for even n, non-finite values, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two family lines were requested for the same parameter.
class CoincidentParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Slopes of two family members coincide, so they do not intersect.
class DegenerateFamilyError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvexityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method ran out of budget or diverged.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (CSV, JSON request bodies).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace envsolve
