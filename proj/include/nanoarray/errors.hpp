#pragma once

#include <stdexcept>
#include <string>

namespace nanoarray {

/// Input outside the physical or mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Caller broke an operation's contract (mismatched sizes, empty grids, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// A numerical kernel failed: singular system, non-convergence, lost positivity.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed its memory budget.
class ResourceLimitError : public DomainError {
 public:
  explicit ResourceLimitError(const std::string& what) : DomainError(what) {}
};

/// Malformed or out-of-range experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nanoarray
