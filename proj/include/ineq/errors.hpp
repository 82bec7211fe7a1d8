#pragma once

#include <stdexcept>

namespace ineq {

// Input data or parameters violate a documented precondition (bad sample,
// malformed file, out-of-range argument). The CLI maps this to exit code 3.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation cannot produce a meaningful result (no sign change over a
// root bracket, degenerate regression, broken conservation). Exit code 4.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ineq
