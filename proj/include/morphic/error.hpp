#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphic {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t requested, std::size_t budget)
      : Error("size budget exceeded: need " + std::to_string(requested) +
              " symbols, budget is " + std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}

  std::size_t requested() const { return requested_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

class NotProlongable : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Raised when a floor of an irrational expression cannot be decided at the
// stored precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace morphic
