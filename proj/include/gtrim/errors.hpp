#pragma once

#include <stdexcept>
#include <string>

namespace gtrim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed text, out-of-range indices, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class FieldMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Mathematical precondition failures. The CLI maps these to exit code 3.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonHomogeneous : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotPrimary : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotInSquare : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotACycle : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace gtrim
