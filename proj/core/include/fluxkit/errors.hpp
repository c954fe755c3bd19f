#pragma once

#include <stdexcept>
#include <string>

namespace fluxkit {

// Operands live in different H_1 (genus mismatch, wrong vector length).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside the domain where its result is asserted.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Curve/symbol data is inconsistent (unknown symbol, violated homology
// constraint between declared classes).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fluxkit
