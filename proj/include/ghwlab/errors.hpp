#pragma once

#include <stdexcept>
#include <string>

namespace ghwlab {

// Error categories the CLI maps to distinct process exit codes.

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisconnectedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured visit budget. `count` carries the
// exact decimal count that triggered the refusal (may not fit in 64 bits).
struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(const std::string& what, std::string count_dec)
      : std::runtime_error(what), count(std::move(count_dec)) {}
  std::string count;
};

}  // namespace ghwlab
