#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something outside the operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class FieldMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DivisionByZero : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : PreconditionError(what + " at line " + std::to_string(line) + ", column " +
                          std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A computation hit a configured limit (degree cap, search budget).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

}  // namespace tamex
