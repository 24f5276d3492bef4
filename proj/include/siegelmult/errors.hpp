#pragma once

#include <stdexcept>
#include <string>

namespace siegelmult {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input failed a stated precondition (wrong genus, not symplectic, bad level...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSymplecticError : public PreconditionError {
 public:
  NotSymplecticError(const std::string& what, int row, int col)
      : PreconditionError(what), row_(row), col_(col) {}
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  int row_;
  int col_;
};

class GenusMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Argument continuation could not resolve the winding within the depth budget.
class ContinuationError : public Error {
 public:
  using Error::Error;
};

// A value that must be an integer was too far from one.
class ResidualGuardError : public Error {
 public:
  ResidualGuardError(const std::string& what, double raw) : Error(what), raw_(raw) {}
  double raw_value() const noexcept { return raw_; }

 private:
  double raw_;
};

// Series truncation cannot reach the requested tail bound.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A multiplier evaluation failed its Z-independence or unit-modulus check.
class MultiplierError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search ran out of budget.
class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace siegelmult
