#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symseq {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data or arguments violate a documented invariant
/// (empty signal, non-finite value, label/shape mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A file could not be parsed. Carries the 1-based line and field
/// (column) where parsing failed, 0 when not applicable.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out = message;
    if (line > 0) {
      out += " (line " + std::to_string(line);
      if (column > 0) out += ", column " + std::to_string(column);
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Equal-width discretization is undefined when max == min.
class DegenerateRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace symseq
