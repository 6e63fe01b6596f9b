#pragma once

#include <stdexcept>
#include <string>

namespace coxfold {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph file text; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// A Coxeter label with no exact form value in the supported field.
class UnsupportedLabel : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured cap (closure size, node count, order iteration) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a mathematical guarantee fails to hold on computed data. Seeing one
/// means a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxfold
