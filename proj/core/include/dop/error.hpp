#pragma once

#include <stdexcept>
#include <string>

namespace dop {

/// Raised when an operation is called outside its documented preconditions.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot be completed within its configured limits.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dop
