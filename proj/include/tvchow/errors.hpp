#pragma once

#include <stdexcept>
#include <string>

namespace tvchow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in lattices of different rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation that is undefined on the EMPTY polyhedron received one.
class EmptyOperandError : public Error {
 public:
  using Error::Error;
};

/// A fan, complex or divisor violates a structural invariant.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Internal certificate failed; indicates inconsistent input data.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (ambient rank, N) would be exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a polyhedral divisor hit an unbounded coefficient.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Malformed computation document or argument; line and column are 1-based, 0 when
/// the error is not tied to a position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message : message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tvchow
