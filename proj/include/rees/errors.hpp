#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rees {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different variable registries.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// A caller violated a documented precondition (bad variable, wrong weight...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// The configured S-pair budget was exhausted before a Gröbner basis was found.
class ResourceBudgetError : public Error {
 public:
  ResourceBudgetError(std::size_t budget)
      : Error("resource budget exceeded: more than " + std::to_string(budget) +
              " S-pairs processed"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

// ∂^{n+1}(a) did not vanish for any n up to the bound.
class NilpotencyError : public Error {
 public:
  NilpotencyError(std::string element, int bound)
      : Error("nilpotency not established within bound " + std::to_string(bound) + " for " +
              element),
        element_(std::move(element)),
        bound_(bound) {}
  const std::string& element() const { return element_; }
  int bound() const { return bound_; }

 private:
  std::string element_;
  int bound_;
};

// A derivation does not preserve the defining ideal.
class DerivationError : public Error {
 public:
  using Error::Error;
};

// The Rees iteration hit its iteration limit before stabilizing.
class NonTerminationError : public Error {
 public:
  using Error::Error;
};

// A self-check on computed output failed. Should never fire on correct input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rees
