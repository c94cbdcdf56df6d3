#pragma once

#include <stdexcept>
#include <string>

namespace propkit {

// Bad input, such as a malformed tuple or an unknown name.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but outside what we can compute or prove.
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Something that must always hold did not (d^2 != 0, span violations).
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace propkit
