#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqrtnfa {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: out-of-range indices, alphabet mismatches, malformed sets.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on a numeric parameter failed (e.g. witness n < 6).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (states, pairs, words) would be exceeded.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// Syntax error in a textual artifact. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    std::string out;
    if (line != 0) {
      out += "line " + std::to_string(line);
      if (column != 0) out += ", column " + std::to_string(column);
      out += ": ";
    } else if (column != 0) {
      out += "position " + std::to_string(column) + ": ";
    }
    return out + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace sqrtnfa
