#pragma once

#include <stdexcept>
#include <string>

namespace detloci {

/// Malformed arguments, out-of-range parameters and shape mismatches.
/// The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition failed on otherwise well-formed data
/// (singular linear part, non-injective Petri map, ...). Exit code 1.
class AlgebraError : public std::runtime_error {
 public:
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace detloci
