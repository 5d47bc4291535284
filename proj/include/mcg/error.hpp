#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Presentation grammar error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Coset enumeration ran past its coset budget.
class CosetLimitError : public Error {
 public:
  explicit CosetLimitError(std::size_t limit)
      : Error("coset enumeration exceeded " + std::to_string(limit) +
              " cosets (raise --max-cosets; the index may be infinite)"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// The maps handed to a homology computation do not compose to zero.
class ComplexError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcg
