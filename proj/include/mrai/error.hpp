#pragma once

#include <stdexcept>

namespace mrai {

/// Raised when an argument violates a documented precondition or invariant.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a file on disk cannot be decoded into one of the containers.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace mrai
