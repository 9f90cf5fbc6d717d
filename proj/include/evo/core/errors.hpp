#pragma once

#include <stdexcept>
#include <string>

namespace evo {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted() : Error("evaluation budget exhausted") {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

class PopulationTooSmall : public Error {
 public:
  PopulationTooSmall(std::size_t needed, std::size_t got)
      : Error("population too small: need at least " + std::to_string(needed) + ", got " +
              std::to_string(got)) {}
};

class DegenerateCell : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

class UnknownProblem : public Error {
 public:
  using Error::Error;
};

}  // namespace evo
