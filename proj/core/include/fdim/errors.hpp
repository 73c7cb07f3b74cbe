#pragma once

#include <stdexcept>
#include <string>

namespace fibdim {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input (bad graph, bad move set, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured cap (dimension, box volume, node count, search budget) was hit.
/// The computation was not attempted or not finished; nothing is implied
/// about the mathematical answer.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction produced an object that failed its own certificate check.
/// Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibdim
