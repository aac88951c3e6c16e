#pragma once

#include <stdexcept>
#include <string>

namespace tangentlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand lengths disagree with the algebra dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition or theorem hypothesis does not hold
/// (non-SPD metric, dependent flag, non-Berwald input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tangentlie
