#pragma once

#include <stdexcept>
#include <string>

namespace booklab {

/// Invalid arguments or violated preconditions. The CLI maps these to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed kcg input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine refused an instance above its size cap, or a search ran out
/// of node budget before it could decide. Never carries a value; CLI exit code 2.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace booklab
