#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsgraph {

/// Raised when an operation's precondition or a structural invariant fails.
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimated_cost)
      : std::runtime_error(what), estimated_cost_(estimated_cost) {}

  std::uint64_t estimated_cost() const noexcept { return estimated_cost_; }

 private:
  std::uint64_t estimated_cost_;
};

}  // namespace tsgraph
