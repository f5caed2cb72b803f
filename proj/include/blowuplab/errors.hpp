#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blowuplab {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands that do not share a dimension or coefficient ring.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// A precondition on the mathematical input failed (zero covector, chart out
/// of range, field not vanishing at the origin, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string &what, std::size_t line, std::size_t column) {
    if (line == 0)
      return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Structure constants that are antisymmetric but violate the Jacobi identity.
class JacobiError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug in the engine,
/// never a property of the input.
class InternalError : public Error {
public:
  using Error::Error;
};

/// The witness search for a non-constant-height algebra hit its sample cap.
class WitnessNotFound : public Error {
public:
  using Error::Error;
};

} // namespace blowuplab
