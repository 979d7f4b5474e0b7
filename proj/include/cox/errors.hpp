#pragma once

#include <stdexcept>

namespace cox {

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation whose outcome is guaranteed by theory came out wrong, or a
// search bound was exhausted. The CLI maps this to exit code 1.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cox
