#pragma once

#include <stdexcept>
#include <string>

namespace vtypes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid graph specification (bad token, empty list, zero cell).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested value is not an eigenvalue of the graph (multiplicity 0).
class NotAnEigenvalue : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace vtypes
