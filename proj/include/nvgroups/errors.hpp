#pragma once

#include <stdexcept>
#include <string>

namespace nvgroups {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Breadth-first closure overran its element budget or ended at the wrong order.
struct ClosureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The three parity signals of a classification disagree.
struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nvgroups
