#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cardfair {

// Error taxonomy maps onto the CLI exit codes: DomainError and
// InvalidInstanceError/InvalidAllocationError are input errors (2),
// BudgetExceededError is 3, FeasibilityError is 4.

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInstanceError : DomainError {
  explicit InvalidInstanceError(const std::string& what) : DomainError(what) {}
};

struct InvalidAllocationError : DomainError {
  explicit InvalidAllocationError(const std::string& what) : DomainError(what) {}
};

struct FeasibilityError : std::runtime_error {
  explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_budget(required) {}
  std::uint64_t required_budget;
};

}  // namespace cardfair
