#pragma once

#include <stdexcept>
#include <string>

namespace earl {

// Bad user input: malformed descriptors, config files, CLI arguments.
// The CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal assumption (e.g. a non-stochastic chain handed to the
// hitting-time solver). The CLI maps this to exit code 2.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace earl
