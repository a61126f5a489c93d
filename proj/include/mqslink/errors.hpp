#pragma once

#include <stdexcept>
#include <string>

namespace mqs {

// Invalid user input: bad arguments, malformed files, violated preconditions.
// The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation could not produce a trustworthy number: singular operating
// point, quadrature non-convergence, violated numeric invariant.  The CLI
// maps this to exit code 2.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mqs
