#pragma once

#include <stdexcept>
#include <string>

namespace gaprig {

// Error categories map one-to-one onto CLI exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gaprig
