#pragma once

#include <stdexcept>
#include <string>

namespace golomb {

/// Raised when caller-supplied data violates an operation's precondition
/// (bad coordinates, grid mismatch, malformed serialized input, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace golomb
