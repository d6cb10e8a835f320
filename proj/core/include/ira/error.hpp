#pragma once

#include <stdexcept>
#include <string>

namespace ira {

/// Raised when caller-supplied data violates an operation's precondition
/// (empty table, out-of-range scenario parameter, malformed config line).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for environmental failures (file I/O) that are not the caller's
/// fault in the same sense.
class RuntimeFailure : public std::runtime_error {
 public:
  explicit RuntimeFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ira
