#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropcore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Kleene star requested for a matrix whose maximum cycle mean exceeds one.
class Divergent : public Error {
 public:
  using Error::Error;
};

/// Operation is not defined for the semiring of its arguments.
class NotSupported : public Error {
 public:
  using Error::Error;
};

class AcyclicGraph : public Error {
 public:
  using Error::Error;
};

class ZeroOrbit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A computed object contradicts a result the library relies on. Carries the
/// offending data serialized as JSON so it can be reproduced.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace tropcore
