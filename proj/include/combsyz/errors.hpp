#pragma once

#include <stdexcept>

namespace combsyz {

// Input violates a documented invariant (bad field value, inconsistent
// dimensions). The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is not syntactically well-formed. The CLI maps this to exit code 3.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace combsyz
