#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kfc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input problems: malformed text, bad parameters.

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SemanticError : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class UnsupportedExpression : public Error {
 public:
  using Error::Error;
};

// Polynomial arithmetic.

class InexactDivision : public Error {
 public:
  using Error::Error;
};

class NotStaircaseForm : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

// Invariant computations.

class RankNotOne : public Error {
 public:
  RankNotOne(const std::string& what, std::size_t rank)
      : Error(what), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

class EpsilonNotOne : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace kfc
