#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrkit {

// Base for all library errors. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotInLattice : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A configured resource cap was hit. Carries how far the computation got.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t produced, int completed_rank)
      : Error(what), produced_(produced), completed_rank_(completed_rank) {}
  std::size_t produced() const { return produced_; }
  int completed_rank() const { return completed_rank_; }

 private:
  std::size_t produced_;
  int completed_rank_;
};

// Raised when a result guaranteed by theory is not reproduced; indicates a bug
// or an invalid certificate.
class Inconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace arrkit
