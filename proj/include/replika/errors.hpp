#pragma once

#include <stdexcept>
#include <string>

namespace replika {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class CyclicQuiver : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A module left the truncated window of the repetitive algebra.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

class Inconclusive : public Error {
 public:
  using Error::Error;
};

class NotDynkin : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// Raised when a computed object contradicts a structural guarantee.
class InternalError : public Error {
 public:
  using Error::Error;
};

class SinkEnd : public Error {
 public:
  using Error::Error;
};

class BongartzEnd : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace replika
