#pragma once

#include <stdexcept>
#include <string>

namespace fieldent {

// Invalid physics input: parameter outside the admissible region.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Quadrature failed to converge within its evaluation budget.
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested integral does not exist (non-integrable integrand).
class DivergenceError : public IntegrationError {
 public:
  explicit DivergenceError(const std::string& msg) : IntegrationError(msg) {}
};

// A stochastic estimate missed its requested statistical precision.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fieldent
