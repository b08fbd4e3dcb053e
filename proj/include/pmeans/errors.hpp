#pragma once

#include <stdexcept>
#include <string>

namespace pmeans {

// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Malformed integration interval (lo >= hi, non-finite endpoint, ...).
class InvalidDomain : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Iteration/subdivision budget exhausted before reaching tolerance.
class NonConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Root bracket without a sign change.
class NoSignChange : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pmeans
