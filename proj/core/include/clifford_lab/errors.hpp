#pragma once

#include <stdexcept>
#include <string>

namespace clifford_lab {

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when the ODE integrator cannot certify a profile (energy drift
/// above bound, period not found, loop not closed).
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace clifford_lab
