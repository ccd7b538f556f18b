#pragma once
/// @file errors.hpp
/// @brief Error taxonomy shared across the library.
///
/// Two failure classes are distinguished because the command-line driver maps
/// them to different exit codes: configuration problems (exit 1) and runtime
/// numerical failures such as instability or invariant violations (exit 2).

#include <stdexcept>
#include <string>

namespace gpme {

/// Invalid user-supplied configuration, problem definition, or preset use.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure while stepping: NaN/Inf, monotonicity violation beyond
/// tolerance, a receding front, or a root solve that did not converge.
/// Carries the index of the failing step when raised from a time loop
/// (-1 when not applicable).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg, long step = -1)
      : std::runtime_error(step >= 0 ? msg + " [step " + std::to_string(step) + "]"
                                     : msg),
        step_index(step) {}

  long step_index;
};

}  // namespace gpme
