#pragma once

#include <stdexcept>
#include <string>

namespace cclab {

// Bad arguments or preconditions. CLI exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or truncated PDL/SDL code.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proved property failed to hold; always an engine bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cclab
