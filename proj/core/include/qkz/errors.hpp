#pragma once

#include <stdexcept>
#include <string>

namespace qkz {

// Invalid parameters or malformed input. Maps to CLI exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base for aborts caused by the numbers themselves. Maps to CLI exit code 3.
class NumericAbort : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A denominator vanished (or fell below the generic-position threshold).
class PoleError : public NumericAbort {
 public:
  using NumericAbort::NumericAbort;
};

// Quadrature hit a NaN/Inf sample.
class NonFiniteSample : public NumericAbort {
 public:
  using NumericAbort::NumericAbort;
};

}  // namespace qkz
