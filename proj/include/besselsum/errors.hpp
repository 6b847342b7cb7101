#pragma once

#include <stdexcept>
#include <string>

namespace besselsum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on a pole of a meromorphic function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A table model was asked for its zeta function outside the range where
/// the truncated eigenvalue sum converges.
class WindowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Internal numerical consistency check failed (e.g. non-monotone tail).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace besselsum
